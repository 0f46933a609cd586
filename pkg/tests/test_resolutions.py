import unittest
import sys
import os

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import field_algebra, lower_triangular, truncated_polynomial
from src.corpus import corpus
from src.field import FieldSpec
from src.modules import projective_module, random_change_of_basis, regular_module
from src.resolutions import (AT_LEAST, CUTOFF, EXACT, INFINITE, PdValue, ext_dim,
                             indecomposable_projectives, is_isomorphic, is_projective,
                             minimal_resolution, proj_dim, simple_modules, top_and_cover)
from src.rings import build_lambda
from src.tilting import cokernel_modules


class TestPdValue(unittest.TestCase):
    """Projective dimensions as tagged values."""

    def test_tags_and_intervals(self):
        """Each tag has its interval and string form."""
        self.assertEqual(PdValue.exact(2).interval, (2.0, 2.0))
        self.assertEqual(PdValue.at_least(3).interval, (3.0, float("inf")))
        self.assertEqual(PdValue.infinite().interval, (float("inf"), float("inf")))
        self.assertEqual(str(PdValue.at_least(3)), ">= 3")
        self.assertEqual(str(PdValue.infinite()), "inf")
        self.assertTrue(PdValue.zero_module().is_exact)
        self.assertFalse(PdValue.infinite().is_finite)

    def test_json_view(self):
        """Open ends are written as strings."""
        self.assertEqual(PdValue.exact(1).to_dict(), {"tag": EXACT, "value": 1})
        self.assertEqual(PdValue.infinite().to_dict(), {"tag": INFINITE, "value": "inf"})
        self.assertEqual(PdValue.at_least(4).to_dict()["tag"], AT_LEAST)


class TestCoversAndResolutions(unittest.TestCase):
    """Projective covers, minimal resolutions and Ext."""

    def setUp(self):
        self.F = FieldSpec.rationals()
        self.dual = truncated_polynomial(self.F, 2)
        self.cubic = truncated_polynomial(self.F, 3)
        self.T2 = lower_triangular(self.F, 2)

    def test_cover_of_projective_is_isomorphism(self):
        """A projective module is its own projective cover."""
        cover = top_and_cover(regular_module(self.dual))
        self.assertEqual(cover.multiplicities, (1,))
        self.assertTrue(cover.is_isomorphism)
        self.assertTrue(is_projective(projective_module(self.T2, 1)))

    def test_simple_over_dual_numbers_is_periodic(self):
        """The simple k[x]/(x^2)-module has Ω S ≅ S and infinite pd."""
        S, = simple_modules(self.dual)
        res = minimal_resolution(S, depth=4)
        self.assertEqual(res.pd, PdValue.infinite())
        self.assertEqual(res.period, (0, 1))
        self.assertTrue(res.witness.is_isomorphism)
        self.assertTrue(res.check_exactness().ok)

    def test_period_two_over_cubic(self):
        """Over k[x]/(x^3) the simple module has period 2."""
        S, = simple_modules(self.cubic)
        res = minimal_resolution(S, depth=4)
        self.assertEqual(res.pd, PdValue.infinite())
        self.assertEqual(res.period, (0, 2))
        self.assertEqual([Om.dim for Om in res.syzygies], [1, 2, 1])

    def test_triangular_projective_dimensions(self):
        """Over T_2(k) one simple is projective and the other has pd 1."""
        values = sorted(proj_dim(S).value for S in simple_modules(self.T2))
        self.assertEqual(values, [0, 1])

    def test_field_simple_is_projective(self):
        """Every module over k is projective."""
        S, = simple_modules(field_algebra(self.F))
        self.assertEqual(proj_dim(S), PdValue.exact(0))

    def test_ext_over_dual_numbers(self):
        """Ext^k(S, S) is one-dimensional in every degree."""
        S, = simple_modules(self.dual)
        for k in range(4):
            self.assertEqual(ext_dim(S, S, k), 1)

    def test_ext_vanishes_past_pd(self):
        """Ext^2 vanishes over the hereditary T_2(k)."""
        simples = simple_modules(self.T2)
        for M in simples:
            for N in simples:
                self.assertEqual(ext_dim(M, N, 2), 0)
        total = sum(ext_dim(M, N, 1) for M in simples for N in simples)
        self.assertEqual(total, 1)

    def test_cutoff_reports_lower_bound(self):
        """A depth-0 resolution of a non-projective module stops at >= 1."""
        S, = simple_modules(self.cubic)
        self.assertEqual(minimal_resolution(S, depth=0).pd, PdValue.at_least(1))

    def test_shallow_query_after_deep_run(self):
        """A depth-0 query still stops at >= 1 after a deeper run finished the resolution."""
        deep = {S.name: minimal_resolution(S, depth=20).pd for S in simple_modules(self.T2)}
        self.assertEqual(sorted(v.value for v in deep.values()), [0, 1])
        for S in simple_modules(self.T2):
            if deep[S.name] == PdValue.exact(1):
                self.assertEqual(proj_dim(S, 0), PdValue.at_least(1))
                self.assertEqual(minimal_resolution(S, depth=0).status, CUTOFF)
                self.assertEqual(proj_dim(S, 1), PdValue.exact(1))
            else:
                self.assertEqual(proj_dim(S, 0), PdValue.exact(0))

    def test_seed_is_part_of_the_key(self):
        """Resolutions asked for with different seeds are computed separately."""
        S, = simple_modules(self.cubic)
        first = minimal_resolution(S, depth=4, seed=0)
        self.assertIs(minimal_resolution(S, depth=4, seed=0), first)
        other = minimal_resolution(S, depth=4, seed=5)
        self.assertIsNot(other, first)
        self.assertEqual(other.pd, first.pd)


class TestIsomorphism(unittest.TestCase):
    """Seeded isomorphism search."""

    def setUp(self):
        self.F = FieldSpec.rationals()

    def test_conjugate_is_isomorphic(self):
        """A random change of basis is recognised with a witness."""
        M = regular_module(truncated_polynomial(self.F, 3))
        N, _ = random_change_of_basis(M, seed=7)
        result = is_isomorphic(M, N, seed=1)
        self.assertTrue(result.isomorphic)
        self.assertTrue(result.witness.is_isomorphism)

    def test_different_projectives(self):
        """The two indecomposable projectives of T_2(k) differ."""
        P1, P2 = indecomposable_projectives(lower_triangular(self.F, 2))
        self.assertFalse(is_isomorphic(P1, P2).isomorphic)
        self.assertEqual(is_isomorphic(P1, P2).verdict, "not-isomorphic")


class TestExtCriterion(unittest.TestCase):
    """pd from the minimal resolution against Ext into the simples, depth 8."""

    DEPTH = 8

    def _check(self, M, simples):
        res = minimal_resolution(M, depth=self.DEPTH)
        for k, cover in enumerate(res.covers):
            exts = [ext_dim(M, S, k, self.DEPTH) for S in simples]
            self.assertEqual(exts, list(cover.multiplicities), (M.name, k))
        if res.pd.tag == EXACT:
            d = res.pd.value
            self.assertTrue(any(ext_dim(M, S, d, self.DEPTH) for S in simples))
            self.assertTrue(all(ext_dim(M, S, d + 1, self.DEPTH) == 0 for S in simples))
        elif res.pd.tag == INFINITE:
            for k in range(1, self.DEPTH + 1):
                self.assertTrue(any(ext_dim(M, S, k, self.DEPTH) for S in simples), (M.name, k))

    def test_corpus_modules(self):
        """Simples and the modules L_i of every corpus Λ."""
        for entry in corpus():
            if entry.lam is None:
                continue
            with self.subTest(entry=entry.name):
                ring = build_lambda(entry.lambda_spec())
                simples = simple_modules(ring.algebra)
                modules = list(simples) + list(cokernel_modules(ring).Ls)
                for M in modules:
                    self._check(M, simples)

    def test_base_algebras(self):
        """Simples of the small base algebras."""
        F = FieldSpec.rationals()
        for A in (field_algebra(F), truncated_polynomial(F, 3), lower_triangular(F, 2)):
            simples = simple_modules(A)
            for S in simples:
                self._check(S, simples)


if __name__ == '__main__':
    unittest.main()
