"""
Exact rational linear algebra.
"""

from .matrix import EchelonBasis, Mat, kernel_basis, rank, rref_rank, solve, to_fraction

__all__ = ["EchelonBasis", "Mat", "kernel_basis", "rank", "rref_rank", "solve", "to_fraction"]
