"""
Exact rational matrices.

Dense, immutable matrices over the rationals with row reduction, kernels
and linear solving. Forward elimination runs on integer rows (denominators
cleared first) and the back-substitution pass runs on fractions; pivots are
always the first nonzero entry in column order, so every derived basis is
reproducible.
"""

import logging
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..core.errors import InconsistentSystemError

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
SparseVector = Dict[int, Fraction]
Scalar = Union[int, Fraction, Rational, str]


def to_fraction(value: Scalar) -> Fraction:
    """Coerce an integer, rational or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


class Mat:
    """
    Immutable dense rational matrix.

    Args:
        rows: Row-major entries; every row must have the same length.
        cols: Column count, required only when ``rows`` is empty.
    """

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[Scalar]], cols: Optional[int] = None):
        data = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("ragged matrix rows")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, got {width}")
        else:
            width = cols or 0
        self._rows: Tuple[Vector, ...] = data
        self._nrows = len(data)
        self._ncols = width

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(((1 if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        return cls(([0] * ncols for _ in range(nrows)), cols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], nrows: int) -> "Mat":
        return cls((columns[j][i] for j in range(len(columns))) for i in range(nrows)) if columns else cls.zeros(nrows, 0)

    @property
    def rows(self) -> int:
        return self._nrows

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._nrows, self._ncols

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._nrows, self._ncols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"Mat({self._nrows}x{self._ncols}: [{body}])"

    def transpose(self) -> "Mat":
        return Mat((self.column(j) for j in range(self._ncols)), cols=self._nrows)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self._ncols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        other_cols = [other.column(j) for j in range(other.cols)]
        return Mat(
            ((sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in other_cols) for row in self._rows),
            cols=other.cols,
        )

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Mat(((a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other)), cols=self._ncols)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Mat(((a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other)), cols=self._ncols)

    def __neg__(self) -> "Mat":
        return Mat(((-a for a in row) for row in self._rows), cols=self._ncols)

    def matvec(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self._ncols:
            raise ValueError(f"vector length {len(v)} does not match {self._ncols} columns")
        vec = [to_fraction(x) for x in v]
        return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self._rows)

    def hstack(self, other: "Mat") -> "Mat":
        if self._nrows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return Mat((r + s for r, s in zip(self._rows, other)), cols=self._ncols + other.cols)

    def vstack(self, other: "Mat") -> "Mat":
        if self._ncols != other.cols:
            raise ValueError("vstack needs equal column counts")
        return Mat(self._rows + tuple(other), cols=self._ncols)


def _integer_row(row: Sequence[Fraction]) -> List[int]:
    denom = lcm(*(x.denominator for x in row)) if row else 1
    ints = [int(x * denom) for x in row]
    return _primitive(ints)


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return [x // g for x in row]
    return row


def rref_rank(m: Mat) -> Tuple[Mat, int, List[int]]:
    """
    Reduced row-echelon form of ``m``.

    Args:
        m: The matrix to reduce.

    Returns:
        A tuple ``(reduced, rank, pivot_columns)``; ``reduced`` has the same
        shape as ``m`` with zero rows at the bottom.
    """
    nrows, ncols = m.shape
    work = [_integer_row(row) for row in m]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        prow = work[r]
        a = prow[c]
        for i in range(r + 1, nrows):
            b = work[i][c]
            if b:
                work[i] = _primitive([a * x - b * y for x, y in zip(work[i], prow)])
        pivots.append(c)
        r += 1

    reduced: List[List[Fraction]] = []
    for i, c in enumerate(pivots):
        p = work[i][c]
        reduced.append([Fraction(x, p) for x in work[i]])
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            factor = reduced[k][c]
            if factor:
                reduced[k] = [x - factor * y for x, y in zip(reduced[k], reduced[i])]
    zero_row = [Fraction(0)] * ncols
    reduced.extend(list(zero_row) for _ in range(nrows - len(pivots)))
    logger.debug(f"rref of {nrows}x{ncols} matrix: rank {len(pivots)}")
    return Mat(reduced, cols=ncols), len(pivots), pivots


def rank(m: Mat) -> int:
    return rref_rank(m)[1]


def kernel_basis(m: Mat) -> List[Vector]:
    """
    Basis of the right null space of ``m``.

    One vector per free column, with a 1 in that column, so the basis is the
    canonical one read off the reduced form.
    """
    reduced, rk, pivots = rref_rank(m)
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -reduced[i, f]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, b: Sequence[Scalar]) -> Vector:
    """
    Find one solution of ``m x = b``; free variables are set to zero.

    Raises:
        ValueError: If ``b`` has the wrong length.
        InconsistentSystemError: If ``b`` is outside the column space.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    augmented = m.hstack(Mat(([x] for x in b), cols=1))
    reduced, rk, pivots = rref_rank(augmented)
    if pivots and pivots[-1] == m.cols:
        raise InconsistentSystemError("right-hand side is outside the column space", row=len(pivots) - 1)
    x = [Fraction(0)] * m.cols
    for i, c in enumerate(pivots):
        x[c] = reduced[i, m.cols]
    return tuple(x)


class EchelonBasis:
    """
    Incrementally maintained reduced echelon basis of a subspace of Q^n.

    Rows are kept fully reduced and stored sparsely as ``{column: value}``
    keyed by their pivot column, which keeps the ideal closure in
    :mod:`src.presentation.graded` affordable on wide Hall bases.

    Args:
        ncols: Ambient dimension.
    """

    def __init__(self, ncols: int):
        self._ncols = ncols
        self._rows: Dict[int, SparseVector] = {}

    @staticmethod
    def _sparse(v: Union[Mapping[int, Scalar], Sequence[Scalar]]) -> SparseVector:
        if isinstance(v, Mapping):
            return {int(k): to_fraction(x) for k, x in v.items() if x}
        return {k: to_fraction(x) for k, x in enumerate(v) if x}

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def row(self, pivot: int) -> SparseVector:
        return dict(self._rows[pivot])

    def dense_rows(self) -> List[Vector]:
        out = []
        for p in self.pivots:
            dense = [Fraction(0)] * self._ncols
            for k, x in self._rows[p].items():
                dense[k] = x
            out.append(tuple(dense))
        return out

    def reduce(self, v: Union[Mapping[int, Scalar], Sequence[Scalar]]) -> SparseVector:
        """Residual of ``v`` after clearing every pivot column; zero iff ``v`` is in the span."""
        out = self._sparse(v)
        for p in [k for k in out if k in self._rows]:
            c = out.get(p)
            if not c:
                continue
            for k, x in self._rows[p].items():
                y = out.get(k, 0) - c * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
        return out

    def contains(self, v: Union[Mapping[int, Scalar], Sequence[Scalar]]) -> bool:
        return not self.reduce(v)

    def add(self, v: Union[Mapping[int, Scalar], Sequence[Scalar]]) -> bool:
        """
        Add ``v`` to the span.

        Returns:
            True if the span grew.
        """
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        if lead != 1:
            r = {k: x / lead for k, x in r.items()}
        for q, row in self._rows.items():
            c = row.get(p)
            if c:
                for k, x in r.items():
                    y = row.get(k, 0) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self._rows[p] = r
        return True

    def extend(self, vectors: Iterable[Union[Mapping[int, Scalar], Sequence[Scalar]]]) -> int:
        """Add every vector; returns how many enlarged the span."""
        return sum(1 for v in vectors if self.add(v))
