import unittest
import sys
import os

import numpy as np

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import (FdAlgebra, Idempotents, center, corner, corner_algebra, field_algebra,
                         is_ideal, is_subring, loewy_length, lower_triangular, matrix_algebra,
                         multiply, product_algebra, quotient, radical, radical_power,
                         subalgebra_generators, subspace_product, truncated_polynomial,
                         validate_algebra)
from src.errors import (DimensionMismatchError, FieldGuardError, NotAnIdealError,
                        NotIdempotentError, ZeroRingError)
from src.field import FieldSpec
from src.linalg import Subquotient, Subspace, nullspace_basis, solve_rows


class TestFieldSpec(unittest.TestCase):
    """Exact scalars over Q and F_p."""

    def setUp(self):
        self.Q = FieldSpec.rationals()
        self.F7 = FieldSpec.prime_field(7)

    def test_descriptors(self):
        """Descriptors round-trip through from_descriptor."""
        self.assertEqual(FieldSpec.from_descriptor("Q"), self.Q)
        self.assertEqual(FieldSpec.from_descriptor("Fp:7"), self.F7)
        self.assertEqual(self.F7.descriptor, "Fp:7")
        self.assertEqual(self.Q.descriptor, "Q")

    def test_bad_descriptors(self):
        """Composite moduli and unknown names are rejected."""
        for text in ("Fp:8", "R", "Fp:x"):
            with self.assertRaises(ValueError):
                FieldSpec.from_descriptor(text)

    def test_rational_literals(self):
        """'p/q' literals stay exact."""
        self.assertEqual(self.Q.format(self.Q.parse("3/4") + self.Q.one), "7/4")

    def test_prime_field_literals(self):
        """Fractions are inverted modulo p; residues print in 0..p-1."""
        self.assertEqual(self.F7.format(self.F7.convert("1/2")), "4")
        self.assertEqual(FieldSpec.prime_field(101).format(FieldSpec.prime_field(101).convert(-1)),
                         "100")
        with self.assertRaises(ZeroDivisionError):
            self.F7.convert("1/7")

    def test_guard(self):
        """The trace-form radical needs p > dim."""
        with self.assertRaises(FieldGuardError):
            FieldSpec.prime_field(3).guard(3)
        self.Q.guard(1000)
        self.F7.guard(6)

    def test_random_vector_is_seeded(self):
        """Equal seeds give equal vectors."""
        a = self.Q.random_vector(np.random.default_rng(5), 6)
        b = self.Q.random_vector(np.random.default_rng(5), 6)
        self.assertEqual(a, b)


class TestSubspaces(unittest.TestCase):
    """Canonical echelon subspaces and subquotients."""

    def setUp(self):
        self.F = FieldSpec.rationals()
        self.v = self.F.vector

    def test_span_is_canonical(self):
        """Different spanning sets of one subspace compare equal."""
        U = Subspace.span(self.F, 3, [self.v([1, 1, 0]), self.v([0, 1, 1])])
        W = Subspace.span(self.F, 3, [self.v([1, 0, -1]), self.v([2, 3, 1]), self.v([1, 1, 0])])
        self.assertEqual(U, W)
        self.assertEqual(U.dim, 2)

    def test_contains_and_containment(self):
        """Membership, containment, sums and intersections."""
        U = Subspace.span(self.F, 3, [self.v([1, 0, 0])])
        W = Subspace.span(self.F, 3, [self.v([0, 1, 0]), self.v([1, 0, 0])])
        self.assertTrue(W.contains(self.v([3, -2, 0])))
        self.assertFalse(W.contains(self.v([0, 0, 1])))
        self.assertTrue(U <= W)
        self.assertFalse(W <= U)
        self.assertEqual((U + W).dim, 2)
        self.assertEqual(U.intersect(W), U)
        X = Subspace.span(self.F, 3, [self.v([0, 1, 1])])
        self.assertTrue(W.intersect(X).is_zero)

    def test_length_mismatch(self):
        """Vectors of the wrong length are rejected."""
        with self.assertRaises(DimensionMismatchError):
            Subspace.span(self.F, 3, [self.v([1, 0])])

    def test_subquotient(self):
        """X/Y has dim X - dim Y and residues vanish on Y."""
        X = Subspace.full(self.F, 3)
        Y = Subspace.span(self.F, 3, [self.v([1, 1, 0])])
        Q = Subquotient(X, Y)
        self.assertEqual(Q.dim, 2)
        self.assertEqual(Q.residue(self.v([1, 1, 0])), self.F.zeros(2))
        r = Q.residue(self.v([2, 0, 5]))
        self.assertEqual(Q.residue(Q.lift(r)), r)

    def test_subquotient_needs_containment(self):
        """The denominator must lie in the numerator."""
        X = Subspace.span(self.F, 2, [self.v([1, 0])])
        Y = Subspace.span(self.F, 2, [self.v([0, 1])])
        with self.assertRaises(ValueError):
            Subquotient(X, Y)

    def test_nullspace_and_solve(self):
        """Solutions of x + y + z = 0 and of x - y = 1."""
        basis, free = nullspace_basis([{0: self.F.one, 1: self.F.one, 2: self.F.one}], 3, self.F)
        self.assertEqual(len(basis), 2)
        self.assertEqual(free, (1, 2))
        x = solve_rows([{0: self.F.one, 1: -self.F.one}], [self.F.one], 2, self.F)
        self.assertEqual(x[0] - x[1], self.F.one)
        self.assertIsNone(solve_rows([{0: self.F.one}, {0: self.F.one}],
                                     [self.F.one, self.F.zero], 1, self.F))


class TestAlgebras(unittest.TestCase):
    """Structure constants, radicals, quotients and corners."""

    def setUp(self):
        self.F = FieldSpec.rationals()
        self.dual = truncated_polynomial(self.F, 2)
        self.cubic = truncated_polynomial(self.F, 3)
        self.T2 = lower_triangular(self.F, 2)
        self.M2 = matrix_algebra(self.F, 2)

    def test_standard_algebras_validate(self):
        """Every standard algebra passes associativity, unit and frame checks."""
        for A in (field_algebra(self.F), self.dual, self.cubic, self.T2, self.M2,
                  product_algebra(self.dual, self.T2)):
            report = validate_algebra(A)
            self.assertTrue(report.ok, report.summary())

    def test_broken_unit_is_reported(self):
        """A table where b1·b0 = 0 fails the right unit law."""
        one = self.F.one
        A = FdAlgebra(self.F, 2, {(0, 0): ((0, one),), (0, 1): ((1, one),),
                                  (1, 1): ((1, one),)}, self.F.vector([1, 0]))
        report = validate_algebra(A)
        self.assertFalse(report.ok)
        self.assertIn("unit-right", report.codes())

    def test_radicals(self):
        """rad of k[x]/(x^3) is (x); M_2(k) is semisimple; rad T_2(k) is E21."""
        self.assertEqual(radical(self.cubic).dim, 2)
        self.assertEqual(radical_power(self.cubic, 2).dim, 1)
        self.assertEqual(loewy_length(self.cubic), 3)
        self.assertTrue(radical(self.M2).is_zero)
        rad = radical(self.T2)
        self.assertEqual(rad.dim, 1)
        self.assertTrue(rad.contains(self.T2.basis_vector(self.T2.labels.index("E21"))))

    def test_ideals_and_subrings(self):
        """rad is an ideal; the diagonal of T_2 is a subring but not an ideal."""
        self.assertTrue(is_ideal(self.T2, radical(self.T2)))
        diagonal = Subspace.span(self.F, 3, self.T2.frame)
        self.assertTrue(is_subring(self.T2, diagonal))
        self.assertFalse(is_ideal(self.T2, diagonal))
        self.assertEqual(subspace_product(self.cubic, radical(self.cubic),
                                          radical(self.cubic)).dim, 1)

    def test_generators(self):
        """x generates k[x]/(x^3) with x·x = x^2 and x^3 = 0; E21 and the frame generate T_2(k)."""
        self.assertEqual(subalgebra_generators(self.cubic), (self.cubic.basis_vector(1),))
        self.assertEqual(len(subalgebra_generators(self.T2)), 1)
        x = self.cubic.basis_vector(1)
        self.assertEqual(multiply(self.cubic, x, x), self.cubic.basis_vector(2))
        self.assertEqual(multiply(self.cubic, x, multiply(self.cubic, x, x)),
                         self.cubic.zero_vector)

    def test_quotient(self):
        """k[x]/(x^3) modulo (x^2) is k[x]/(x^2)."""
        Q = quotient(self.cubic, radical_power(self.cubic, 2))
        self.assertEqual(Q.algebra.dim, 2)
        self.assertTrue(validate_algebra(Q.algebra).ok)
        self.assertEqual(radical(Q.algebra).dim, 1)
        x = self.cubic.basis_vector(1)
        self.assertEqual(Q.lift(Q.project(x)), x)

    def test_quotient_errors(self):
        """Quotients by the whole algebra or by a non-ideal are refused."""
        with self.assertRaises(ZeroRingError):
            quotient(self.dual, Subspace.full(self.F, 2))
        diagonal = Subspace.span(self.F, 3, [self.T2.frame[0]])
        with self.assertRaises(NotAnIdealError):
            quotient(self.T2, diagonal)

    def test_center(self):
        """Commutative algebras are their own center; M_2(k) has center k."""
        self.assertTrue(center(self.cubic).is_full)
        self.assertEqual(center(self.M2).dim, 1)
        self.assertEqual(center(self.T2).dim, 1)

    def test_corners(self):
        """e_1 M_2 e_2 is one-dimensional; corners need idempotents."""
        e1, e2 = self.M2.frame
        self.assertEqual(corner(self.M2, e1, e2).dim, 1)
        self.assertEqual(corner_algebra(self.M2, e1).algebra.dim, 1)
        with self.assertRaises(NotIdempotentError):
            corner(self.cubic, self.cubic.basis_vector(1), self.cubic.unit)

    def test_idempotents_check(self):
        """The frame of M_2 is complete and orthogonal; a repeated idempotent is not."""
        self.assertTrue(Idempotents(self.M2.frame).check(self.M2).ok)
        e1 = self.M2.frame[0]
        report = Idempotents((e1, e1)).check(self.M2)
        self.assertIn("not-orthogonal", report.codes())
        self.assertIn("not-complete", report.codes())

    def test_prime_field_algebra(self):
        """The same constructions work over F_101."""
        F = FieldSpec.prime_field(101)
        A = truncated_polynomial(F, 4)
        self.assertTrue(validate_algebra(A).ok)
        self.assertEqual(radical(A).dim, 3)


if __name__ == '__main__':
    unittest.main()
