import unittest
import sys
import os

import numpy as np

# Ensure the 'src' directory is in the Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import (FdAlgebra, Idempotents, lower_triangular, matrix_algebra, product_algebra,
                         truncated_polynomial)
from src.corpus import EXAMPLE_3_QUIVER
from src.errors import NonSplitError
from src.field import FieldSpec
from src.quiver import build_path_algebra
from src.semisimple import (cartan_determinant, cartan_matrix, minimal_polynomial,
                            primitive_decomposition, primitive_idempotents, simple_dimensions,
                            split_semisimple)


def _two_point_algebra(F: FieldSpec, square: int) -> FdAlgebra:
    """k[x]/(x^2 - square) on the basis 1, x with only the unit as frame."""
    one = F.one
    table = {
        (0, 0): ((0, one),),
        (0, 1): ((1, one),),
        (1, 0): ((1, one),),
        (1, 1): ((0, F.convert(square)),),
    }
    return FdAlgebra(F, 2, table, F.vector([1, 0]), labels=("1", "x"))


class TestPrimitiveIdempotents(unittest.TestCase):
    """Primitive decompositions of small split algebras."""

    def setUp(self):
        self.F = FieldSpec.rationals()

    def test_matrix_algebra_is_one_isoclass(self):
        """M_2(k) has two primitive idempotents, both in one isoclass."""
        M2 = matrix_algebra(self.F, 2)
        decomposition = primitive_decomposition(M2)
        self.assertEqual(len(decomposition.idempotents), 2)
        self.assertEqual(decomposition.multiplicities, (2,))
        self.assertFalse(decomposition.is_basic)
        self.assertTrue(decomposition.idempotents.check(M2).ok)
        self.assertEqual(simple_dimensions(M2), (2,))

    def test_triangular_is_basic(self):
        """T_2(k) is basic with two non-isomorphic primitives."""
        T2 = lower_triangular(self.F, 2)
        decomposition = primitive_decomposition(T2)
        self.assertTrue(decomposition.is_basic)
        self.assertEqual(decomposition.multiplicities, (1, 1))

    def test_split_without_frame(self):
        """k x k given only by its unit is split by the minimal polynomial of x."""
        A = _two_point_algebra(self.F, 1)
        prims = primitive_idempotents(A)
        self.assertEqual(len(prims), 2)
        self.assertTrue(prims.check(A).ok)
        self.assertEqual(primitive_decomposition(A).multiplicities, (1, 1))

    def test_split_semisimple_matrix_algebra(self):
        """Splitting M_2(k) from its unit gives a complete orthogonal pair."""
        M2 = matrix_algebra(self.F, 2)
        prims = split_semisimple(M2)
        self.assertEqual(len(prims), 2)
        self.assertTrue(Idempotents(tuple(prims)).check(M2).ok)

    def test_non_split_field_extension(self):
        """Q[x]/(x^2 + 1) does not split over Q but does over F_5."""
        with self.assertRaises(NonSplitError):
            primitive_decomposition(_two_point_algebra(self.F, -1))
        F5 = FieldSpec.prime_field(5)
        self.assertEqual(primitive_decomposition(_two_point_algebra(F5, -1)).multiplicities,
                         (1, 1))

    def test_minimal_polynomial(self):
        """x in k[x]/(x^3) has minimal polynomial t^3."""
        A = truncated_polynomial(self.F, 3)
        mu = minimal_polynomial(A, A.basis_vector(1))
        self.assertEqual(mu.degree(), 3)
        self.assertEqual(mu.all_coeffs(), [1, 0, 0, 0])


class TestCartanMatrices(unittest.TestCase):
    """Cartan matrices and their determinants."""

    def setUp(self):
        self.F = FieldSpec.rationals()

    def test_dual_numbers(self):
        """k[x]/(x^2) has Cartan matrix [[2]]."""
        C = cartan_matrix(truncated_polynomial(self.F, 2))
        np.testing.assert_array_equal(C, np.array([[2]]))
        self.assertEqual(cartan_determinant(C), 2)

    def test_triangular(self):
        """T_2(k) has a unitriangular Cartan matrix."""
        C = cartan_matrix(lower_triangular(self.F, 2))
        self.assertEqual(C.shape, (2, 2))
        self.assertEqual(int(C.sum()), 3)
        self.assertEqual(cartan_determinant(C), 1)

    def test_product_is_block_diagonal(self):
        """The Cartan matrix of a product is the direct sum of the factors'."""
        A = product_algebra(truncated_polynomial(self.F, 3), lower_triangular(self.F, 2))
        C = cartan_matrix(A)
        self.assertEqual(C.shape, (3, 3))
        self.assertEqual(cartan_determinant(C), 3)

    def test_quiver_algebra(self):
        """The two-vertex quiver algebra has Cartan matrix [[4, 1], [1, 2]]."""
        A, _ = build_path_algebra(EXAMPLE_3_QUIVER, self.F)
        C = cartan_matrix(A)
        self.assertEqual(sorted(np.diag(C).tolist()), [2, 4])
        self.assertEqual(int(C[0, 1]), 1)
        self.assertEqual(int(C[1, 0]), 1)
        self.assertEqual(cartan_determinant(C), 7)

    def test_empty_determinant(self):
        """The empty Cartan matrix has determinant 1."""
        self.assertEqual(cartan_determinant(np.zeros((0, 0), dtype=np.int64)), 1)


if __name__ == '__main__':
    unittest.main()
