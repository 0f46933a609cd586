import unittest
import sys
import os

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import corner, lower_triangular, radical, truncated_polynomial
from src.corpus import corpus_entry
from src.errors import NotASubmoduleError
from src.field import FieldSpec
from src.linalg import Subspace
from src.modules import (ModuleMap, cokernel, compose, cyclic_quotient, direct_sum,
                         generated_submodule, hom_space, image, kernel, projective_module,
                         quotient_module, random_change_of_basis, regular_module, restrict,
                         right_multiplication, socle_subspace, submodule, top_module)
from src.resolutions import simple_modules
from src.rings import build_full_matrix, build_lambda, embed
from src.tilting import cokernel_modules


class TestModules(unittest.TestCase):
    """Left modules given by action matrices."""

    def setUp(self):
        self.F = FieldSpec.rationals()
        self.T2 = lower_triangular(self.F, 2)
        self.cubic = truncated_polynomial(self.F, 3)

    def test_regular_module_is_a_module(self):
        """The left regular action satisfies the module axioms."""
        for A in (self.T2, self.cubic):
            M = regular_module(A)
            self.assertEqual(M.dim, A.dim)
            self.assertTrue(M.validate().ok)

    def test_projective_dimensions(self):
        """T_2(k)·E11 is two-dimensional and T_2(k)·E22 is simple."""
        self.assertEqual(projective_module(self.T2, 0).dim, 2)
        self.assertEqual(projective_module(self.T2, 1).dim, 1)

    def test_named_projective_is_shared(self):
        """Asking twice for one named projective gives one object."""
        P = projective_module(self.T2, 0, "P1")
        self.assertIs(P, projective_module(self.T2, 0, "P1"))
        self.assertEqual(P.name, "P1")

    def test_submodule_check(self):
        """span(E11) is not stable under E21."""
        M = regular_module(self.T2)
        with self.assertRaises(NotASubmoduleError):
            submodule(M, Subspace.span(self.F, 3, [self.T2.frame[0]]))

    def test_quotient_and_top(self):
        """k[x]/(x^3) has top of dimension 1 and socle of dimension 1."""
        M = regular_module(self.cubic)
        top, projection = top_module(M)
        self.assertEqual(top.dim, 1)
        self.assertTrue(projection.is_surjective)
        self.assertEqual(socle_subspace(M).dim, 1)
        Q, _ = quotient_module(M, radical(self.cubic))
        self.assertEqual(Q.dim, 1)
        self.assertEqual(cyclic_quotient(self.cubic, radical(self.cubic)).dim, 1)

    def test_hom_dimensions_match_corners(self):
        """dim Hom(Ae, Af) = dim eAf for every pair of frame idempotents."""
        A = self.T2
        for e in A.frame:
            for f in A.frame:
                H = hom_space(projective_module(A, e), projective_module(A, f))
                self.assertEqual(H.dim, corner(A, e, f).dim)
                for g in H:
                    self.assertTrue(g.is_homomorphism())

    def test_kernel_and_cokernel(self):
        """Multiplication by x on k[x]/(x^3) has one-dimensional kernel and cokernel."""
        A = self.cubic
        x = A.basis_vector(1)
        mu = right_multiplication(A, A.unit, A.unit, x)
        K, inclusion = kernel(mu)
        C, _ = cokernel(mu)
        self.assertEqual(K.dim, 1)
        self.assertEqual(C.dim, 1)
        self.assertTrue(inclusion.then(mu).is_zero)
        self.assertTrue(compose(inclusion, mu).is_zero)
        self.assertEqual(image(mu).dim, 2)

    def test_generated_submodule(self):
        """x generates the radical of k[x]/(x^3)."""
        M = regular_module(self.cubic)
        S, inclusion = generated_submodule(M, [self.cubic.basis_vector(1)])
        self.assertEqual(S.dim, 2)
        self.assertTrue(inclusion.is_injective)

    def test_restriction_along_embedding(self):
        """M_2(A) restricted to Λ ⊆ M_2(A) is a Λ-module of the same dimension."""
        spec = corpus_entry("lambda-dual-numbers").lambda_spec()
        lam = build_lambda(spec)
        gamma = build_full_matrix(spec.base, 2)
        M = restrict(regular_module(gamma.algebra), embed(lam, gamma), lam.algebra)
        self.assertEqual(M.dim, 8)
        self.assertIs(M.algebra, lam.algebra)
        self.assertTrue(M.validate().ok)

    def test_direct_sum(self):
        """Injections followed by projections are the identity."""
        P1 = projective_module(self.T2, 0)
        P2 = projective_module(self.T2, 1)
        D = direct_sum([P1, P2], "P1+P2")
        self.assertEqual(D.module.dim, 3)
        self.assertTrue(D.module.validate().ok)
        composite = D.injections[0].then(D.projections[0])
        self.assertEqual(composite.mat, ModuleMap.identity(P1).mat)
        self.assertTrue(D.injections[1].then(D.projections[0]).is_zero)

    def test_change_of_basis(self):
        """A conjugated module is a module, and the change of basis is a module map."""
        M = regular_module(self.cubic)
        N, iso = random_change_of_basis(M, seed=3)
        self.assertTrue(N.validate().ok)
        self.assertTrue(iso.is_isomorphism)
        self.assertTrue(iso.is_homomorphism())


class TestHomUnderChangeOfBasis(unittest.TestCase):
    """Hom dimensions do not depend on the chosen bases."""

    def test_seeded_basis_changes(self):
        """100 seeded conjugations of modules over the dual-numbers Λ."""
        ring = build_lambda(corpus_entry("lambda-dual-numbers").lambda_spec())
        bundle = cokernel_modules(ring)
        modules = list(simple_modules(ring.algebra)) + list(bundle.Ls) + [bundle.top_projective]
        pairs = [(M, N) for M in modules for N in modules]
        expected = [hom_space(M, N).dim for M, N in pairs]
        for seed in range(100):
            a = seed % len(pairs)
            M, N = pairs[a]
            with self.subTest(seed=seed, source=M.name, target=N.name):
                M2, _ = random_change_of_basis(M, seed=seed)
                N2, _ = random_change_of_basis(N, seed=seed + 1000)
                self.assertEqual(hom_space(M2, N2).dim, expected[a])
                self.assertEqual(hom_space(M2, N).dim, expected[a])


if __name__ == '__main__':
    unittest.main()
