"""
Unit tests for exact rational linear algebra.
"""

import random
import unittest
from fractions import Fraction

from src.core.errors import InconsistentSystemError
from src.exactla import EchelonBasis, Mat, kernel_basis, rank, rref_rank, solve, to_fraction


class TestMat(unittest.TestCase):
    """Test cases for the Mat type."""

    def test_identity_and_product(self):
        a = Mat([[1, 2], [3, 4]])
        self.assertEqual(a @ Mat.identity(2), a)
        self.assertEqual(a @ a, Mat([[7, 10], [15, 22]]))

    def test_transpose_and_stack(self):
        a = Mat([[1, 2, 3]])
        self.assertEqual(a.transpose().shape, (3, 1))
        self.assertEqual(a.vstack(a).shape, (2, 3))
        self.assertEqual(a.hstack(Mat([[4]])), Mat([[1, 2, 3, 4]]))

    def test_string_entries_are_exact(self):
        a = Mat([["1/2", "-3/4"]])
        self.assertEqual(a[0, 0], Fraction(1, 2))
        self.assertEqual(a[0, 1], Fraction(-3, 4))

    def test_floats_rejected(self):
        with self.assertRaises(TypeError):
            to_fraction(0.5)

    def test_ragged_rows_rejected(self):
        with self.assertRaises(ValueError):
            Mat([[1, 2], [3]])

    def test_shape_mismatch(self):
        with self.assertRaises(ValueError):
            Mat([[1, 2]]) @ Mat([[1, 2]])


class TestRowReduction(unittest.TestCase):
    """Test cases for rref, rank, kernel and solve."""

    def test_rank_of_dependent_rows(self):
        self.assertEqual(rank(Mat([[1, 2], [2, 4]])), 1)

    def test_kernel_of_dependent_rows(self):
        self.assertEqual(kernel_basis(Mat([[1, 2], [2, 4]])), [(Fraction(-2), Fraction(1))])

    def test_solve_with_fraction(self):
        self.assertEqual(solve(Mat([[2, 0], [0, 3]]), [1, 1]), (Fraction(1, 2), Fraction(1, 3)))

    def test_inconsistent_system(self):
        with self.assertRaises(InconsistentSystemError):
            solve(Mat([[1, 1], [1, 1]]), [1, 2])

    def test_zero_matrix(self):
        reduced, rk, pivots = rref_rank(Mat.zeros(2, 3))
        self.assertEqual(rk, 0)
        self.assertEqual(pivots, [])
        self.assertEqual(len(kernel_basis(Mat.zeros(2, 3))), 3)

    def test_empty_matrix(self):
        self.assertEqual(rank(Mat([], cols=0)), 0)
        self.assertEqual(kernel_basis(Mat([], cols=2)), [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))])

    def test_reduced_form(self):
        reduced, rk, pivots = rref_rank(Mat([[2, 4, 6], [1, 3, 5]]))
        self.assertEqual(rk, 2)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced, Mat([[1, 0, -1], [0, 1, 2]]))

    def test_random_rank_nullity(self):
        rng = random.Random(20240611)
        for _ in range(40):
            rows, cols = rng.randint(1, 6), rng.randint(1, 6)
            m = Mat([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)])
            kernel = kernel_basis(m)
            self.assertEqual(rank(m) + len(kernel), cols)
            for v in kernel:
                self.assertTrue(all(x == 0 for x in m.matvec(v)))

    def test_random_solve_roundtrip(self):
        rng = random.Random(7)
        for _ in range(30):
            m = Mat([[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)])
            x = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
            b = m.matvec(x)
            self.assertEqual(m.matvec(solve(m, b)), b)


class TestEchelonBasis(unittest.TestCase):
    """Test cases for the incremental echelon basis."""

    def test_add_and_contains(self):
        basis = EchelonBasis(3)
        self.assertTrue(basis.add([1, 1, 0]))
        self.assertTrue(basis.add([0, 1, 1]))
        self.assertFalse(basis.add([1, 2, 1]))
        self.assertEqual(basis.rank, 2)
        self.assertTrue(basis.contains([2, 0, -2]))
        self.assertFalse(basis.contains([0, 0, 1]))

    def test_sparse_input(self):
        basis = EchelonBasis(5)
        basis.add({4: 2})
        self.assertEqual(basis.pivots, [4])
        self.assertEqual(basis.row(4), {4: Fraction(1)})

    def test_rows_stay_reduced(self):
        basis = EchelonBasis(3)
        basis.extend([[0, 1, 1], [1, 1, 0]])
        self.assertEqual(basis.dense_rows(), [(1, 0, -1), (0, 1, 1)])

    def test_matches_dense_rank(self):
        rng = random.Random(3)
        for _ in range(20):
            rows = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(5)]
            basis = EchelonBasis(6)
            basis.extend(rows)
            self.assertEqual(basis.rank, rank(Mat(rows)))


if __name__ == "__main__":
    unittest.main()
