"""
Theta coordinates of weight -2 classes.

The weight -2 piece of a source quotient splits under the symplectic group
into its invariant part, spanned by the classes of ``Theta_ij`` (i < j),
and the complement ``W``: the smallest generator-stable subspace containing
every image of ``rho(M) - I``. Coordinates along the ``Theta_ij`` classes
do not depend on the Hall order or on the chosen quotient basis.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import InconsistentSystemError, IntegrityError
from ..exactla.matrix import EchelonBasis, Mat, Vector, rank, solve
from ..presentation.equivariance import quotient_representation
from ..presentation.graded import GradedQuotient
from ..symplectic.space import SpGeneratorSet, theta_pair

logger = logging.getLogger(__name__)

THETA_WEIGHT = -2


def theta_key(i: int, j: int) -> str:
    return f"{i}{j}" if i < 10 and j < 10 else f"{i},{j}"


def _stable_complement(matrices: Sequence[Mat], dim: int) -> EchelonBasis:
    span = EchelonBasis(dim)
    identity = Mat.identity(dim)
    for m in matrices:
        diff = m - identity
        for k in range(dim):
            span.add(diff.column(k))
    grew = True
    while grew:
        grew = False
        for vec in span.dense_rows():
            for m in matrices:
                if span.add(m.matvec(vec)):
                    grew = True
    return span


class ThetaDecomposition:
    """
    Basis of the weight -2 quotient adapted to ``Theta classes + W``.

    Args:
        quotient: A quotient whose presentation carries a symplectic space.
        generators: Symplectic generators; defaults to the documented set.

    Raises:
        IntegrityError: If the Theta classes and ``W`` do not span the piece
            or overlap.
    """

    def __init__(self, quotient: GradedQuotient, generators: Optional[SpGeneratorSet] = None):
        self.quotient = quotient
        space = quotient.presentation.space
        algebra = quotient.algebra
        dim = quotient.dimension(THETA_WEIGHT)
        rep = quotient_representation(quotient, THETA_WEIGHT, generators)
        complement = _stable_complement(rep.matrices, dim)

        copies = algebra.alphabet.copies()
        seen = EchelonBasis(dim)
        keys: List[str] = []
        columns: List[Vector] = []
        for x, i in enumerate(copies):
            for j in copies[x + 1:]:
                v = quotient.project(theta_pair(space, algebra, i, j), THETA_WEIGHT)
                if seen.add(v):
                    keys.append(theta_key(i, j))
                    columns.append(v)
        complement_rows = complement.dense_rows()
        if len(columns) + len(complement_rows) != dim:
            raise IntegrityError(
                f"weight -2 piece of dimension {dim} does not split as {len(columns)} Theta classes "
                f"+ {len(complement_rows)}-dimensional complement"
            )
        self.keys: Tuple[str, ...] = tuple(keys)
        self.complement_dimension = len(complement_rows)
        self._basis = Mat.from_columns(columns + complement_rows, dim)
        if rank(self._basis) != dim:
            raise IntegrityError("Theta classes meet the non-invariant complement")
        logger.debug(f"Theta decomposition: keys {self.keys}, complement dimension {self.complement_dimension}")

    def decompose(self, coords: Sequence[Fraction]) -> Tuple[Dict[str, Fraction], Vector]:
        """
        Split quotient coordinates into Theta coordinates and complement coordinates.

        Raises:
            IntegrityError: If the adapted basis does not reach ``coords``.
        """
        try:
            x = solve(self._basis, coords)
        except InconsistentSystemError as e:
            raise IntegrityError(f"vector outside the adapted weight -2 basis: {e}") from e
        k = len(self.keys)
        return dict(zip(self.keys, x[:k])), tuple(x[k:])

    def theta_coordinates(self, coords: Sequence[Fraction]) -> Dict[str, Fraction]:
        return self.decompose(coords)[0]
