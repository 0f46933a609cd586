import unittest
import sys
import os

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import (Idempotents, field_algebra, lower_triangular, radical, radical_power,
                         truncated_polynomial, validate_algebra)
from src.corpus import corpus_entry
from src.errors import DimensionCapError, SpecValidationError, ZeroRingError
from src.field import FieldSpec
from src.linalg import Subspace
from src.rings import (LambdaSpec, TiledTriangularSpec, basic_block_extension,
                       build_block_extension, build_cor33_shape, build_full_matrix,
                       build_lambda, build_sigma, build_tiled_triangular, embed,
                       lambda_as_block_spec, sigma_triangular_parts, validate_block_spec,
                       validate_lambda_spec, validate_tiled_spec)


class TestLambdaAndSigma(unittest.TestCase):
    """Λ and Σ from LambdaSpec data."""

    def setUp(self):
        self.F = FieldSpec.rationals()
        self.dual = truncated_polynomial(self.F, 2)
        self.spec = LambdaSpec.uniform(self.dual, [radical(self.dual)], name="dual")

    def test_dual_numbers_dimensions(self):
        """Λ = [[A, rad], [A, A]] has dimension 7 and Σ has dimension 4."""
        lam = build_lambda(self.spec)
        sigma = build_sigma(self.spec)
        self.assertEqual(lam.dim, 7)
        self.assertEqual(lam.entry_dims(), [[2, 1], [2, 2]])
        self.assertEqual(sigma.dim, 4)
        self.assertEqual(sigma.entry_dims(), [[1, 0], [1, 2]])
        for ring in (lam, sigma):
            self.assertTrue(validate_algebra(ring.algebra).ok)
            self.assertTrue(ring.idems.check(ring.algebra).ok)

    def test_built_ring_to_dict(self):
        """The JSON view names kind, size and entry dimensions."""
        data = build_lambda(self.spec).to_dict()
        self.assertEqual(data["kind"], "lambda")
        self.assertEqual(data["size"], 2)
        self.assertEqual(data["dim"], 7)

    def test_example_1_dimension(self):
        """The 4x4 powers-of-ideal ring over k[x]/(x^4) has dimension 47."""
        spec = corpus_entry("example-1").lambda_spec()
        self.assertTrue(validate_lambda_spec(spec).ok)
        self.assertEqual(build_lambda(spec).dim, 47)

    def test_chain_violation(self):
        """I_3 not inside I_2 is reported under the chain code."""
        A = truncated_polynomial(self.F, 3)
        spec = LambdaSpec.uniform(A, [radical_power(A, 2), radical(A)])
        report = validate_lambda_spec(spec)
        self.assertFalse(report.ok)
        self.assertIn("chain", report.codes())
        self.assertIn("I_3 is not inside I_2", report.summary())
        with self.assertRaises(SpecValidationError):
            build_lambda(spec)

    def test_non_ideal_is_reported(self):
        """The diagonal of T_2(k) is a subring but not an ideal."""
        T2 = lower_triangular(self.F, 2)
        diagonal = Subspace.span(self.F, 3, T2.frame)
        spec = LambdaSpec.uniform(T2, [diagonal])
        self.assertIn("ideal", validate_lambda_spec(spec).codes())

    def test_missing_cross_ideal(self):
        """Every I_ij below the diagonal must be supplied."""
        A = truncated_polynomial(self.F, 3)
        rad = radical(A)
        spec = LambdaSpec(A, 3, (Subspace.full(self.F, 3),) * 2, (rad, rad), {})
        self.assertIn("missing-cross-ideal", validate_lambda_spec(spec).codes())

    def test_sigma_zero_ring(self):
        """A_2 = I_2 makes a diagonal entry of Σ the zero ring."""
        spec = LambdaSpec.uniform(self.dual, [Subspace.full(self.F, 2)])
        self.assertEqual(build_lambda(spec).dim, 8)
        with self.assertRaises(ZeroRingError):
            build_sigma(spec)

    def test_sigma_triangular_parts(self):
        """The top-left part R of Σ is A_2/I_2 for n = 2."""
        parts = sigma_triangular_parts(self.spec)
        self.assertEqual(parts.R.dim, 1)
        self.assertEqual(len(parts.M_ideals), 1)

    def test_cor33_shapes(self):
        """Both constant-column shapes validate; other variants are refused."""
        A = truncated_polynomial(self.F, 3)
        ideals = [radical(A), radical_power(A, 2)]
        self.assertFalse(build_cor33_shape(A, ideals, 1).chain_required)
        variant2 = build_cor33_shape(A, ideals, 2)
        self.assertTrue(variant2.cross_ideal(3, 2).is_full)
        with self.assertRaises(ValueError):
            build_cor33_shape(A, ideals, 3)

    def test_dimension_cap(self):
        """Rings above the cap are refused before assembly."""
        with self.assertRaises(DimensionCapError):
            build_lambda(self.spec, max_dim=6)


class TestFullAndTiled(unittest.TestCase):
    """M_n(A), tiled triangular rings and embeddings."""

    def setUp(self):
        self.F = FieldSpec.rationals()
        self.dual = truncated_polynomial(self.F, 2)

    def test_full_matrix_one_is_base(self):
        """M_1(A) has the structure constants of A."""
        ring = build_full_matrix(self.dual, 1)
        self.assertEqual(ring.algebra.table, self.dual.table)
        self.assertEqual(ring.dim, 2)
        with self.assertRaises(ValueError):
            build_full_matrix(self.dual, 0)

    def test_embedding_of_lambda(self):
        """Λ sits inside M_2(A) as an injective algebra map."""
        spec = LambdaSpec.uniform(self.dual, [radical(self.dual)])
        lam = build_lambda(spec)
        gamma = build_full_matrix(self.dual, 2)
        self.assertEqual(gamma.dim, 8)
        phi = embed(lam, gamma)
        self.assertEqual(phi.shape, (8, 7))
        self.assertEqual(phi.rank(), 7)

    def test_tiled_powers_of_radical(self):
        """A on and below the diagonal with rad^(j-i) above it."""
        A = truncated_polynomial(self.F, 3)
        spec = TiledTriangularSpec.from_rule(A, 4, lambda i, j: radical_power(A, j - i))
        self.assertTrue(validate_tiled_spec(spec).ok)
        ring = build_tiled_triangular(spec)
        self.assertEqual(ring.dim, 38)
        self.assertTrue(validate_algebra(ring.algebra).ok)

    def test_tiled_closure_failure(self):
        """rad·rad is not inside rad^3 at position (1,3)."""
        A = truncated_polynomial(self.F, 4)
        spec = TiledTriangularSpec(A, 3, {(1, 2): radical(A), (2, 3): radical(A),
                                          (1, 3): radical_power(A, 3)})
        report = validate_tiled_spec(spec)
        self.assertIn("closure", report.codes())
        with self.assertRaises(SpecValidationError):
            build_tiled_triangular(spec)

    def test_field_tiled_is_matrix_ring(self):
        """Every entry full over k gives M_2(k)."""
        k = field_algebra(self.F)
        spec = TiledTriangularSpec(k, 2, {(1, 2): Subspace.full(self.F, 1)})
        self.assertEqual(build_tiled_triangular(spec).dim, 4)


class TestBlockExtensions(unittest.TestCase):
    """P(n_1, ..., n_m) from BlockExtensionSpec data."""

    def setUp(self):
        self.F = FieldSpec.rationals()

    def test_block_over_dual_numbers(self):
        """P(2) over k[x]/(x^2) is [[A, A], [rad, A]] of dimension 7."""
        spec = corpus_entry("block-qf-dual").block_spec()
        self.assertTrue(validate_block_spec(spec).ok)
        ring = build_block_extension(spec)
        self.assertEqual(ring.dim, 7)
        self.assertEqual(ring.entry_dims(), [[2, 2], [1, 2]])
        self.assertTrue(validate_algebra(ring.algebra).ok)

    def test_quiver_block_extension(self):
        """P(3,2) over the two-vertex quiver algebra has dimension 52, entry by entry as displayed."""
        spec = corpus_entry("example-3").block_spec()
        self.assertEqual(spec.sizes, (3, 2))
        ring = build_block_extension(spec)
        self.assertEqual(ring.dim, 52)
        self.assertEqual(ring.size, 5)
        self.assertEqual(ring.position_names, ("1.1", "1.2", "1.3", "2.1", "2.2"))
        self.assertEqual(ring.entry_dims(), [[4, 4, 4, 1, 1],
                                             [3, 4, 4, 1, 1],
                                             [3, 3, 4, 1, 1],
                                             [1, 1, 1, 2, 2],
                                             [1, 1, 1, 1, 2]])
        self.assertTrue(ring.idems.check(ring.algebra).ok)

    def test_basic_triangular(self):
        """P(1,1) over T_2(k) is T_2(k) again."""
        T2 = lower_triangular(self.F, 2)
        spec = basic_block_extension(T2, Idempotents(T2.frame), (1, 1))
        self.assertEqual(build_block_extension(spec).dim, 3)

    def test_lambda_as_block(self):
        """A LambdaSpec read as a one-block spec builds a ring of the same dimension."""
        dual = truncated_polynomial(self.F, 2)
        spec = LambdaSpec.uniform(dual, [radical(dual)])
        block = lambda_as_block_spec(spec)
        self.assertTrue(validate_block_spec(block).ok)
        self.assertEqual(build_block_extension(block).dim, build_lambda(spec).dim)

    def test_bad_idempotents(self):
        """Block idempotents must be complete and orthogonal."""
        T2 = lower_triangular(self.F, 2)
        spec = basic_block_extension(T2, Idempotents((T2.frame[0],)), (2,))
        self.assertFalse(validate_block_spec(spec).ok)


if __name__ == '__main__':
    unittest.main()
