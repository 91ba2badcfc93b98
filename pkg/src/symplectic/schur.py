"""
Finite-dimensional representations given on group generators, and the
intertwiner solver.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..exactla.matrix import Mat, kernel_basis
from .space import SpGeneratorSet, sp_generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    """
    A representation of a finitely generated group, as one matrix per generator.

    Attributes:
        name: Display name, e.g. ``"H"`` or ``"H^3"``.
        dim: Dimension of the underlying vector space.
        matrices: ``dim x dim`` matrices, in the order of the group generators.
    """

    name: str
    dim: int
    matrices: Tuple[Mat, ...]

    def __post_init__(self):
        for m in self.matrices:
            if m.shape != (self.dim, self.dim):
                raise ValueError(f"{self.name}: matrix shape {m.shape} does not match dim {self.dim}")


def standard(genus: int, generators: Optional[SpGeneratorSet] = None) -> Representation:
    """H itself."""
    gens = generators or sp_generators(genus)
    return Representation("H", 2 * genus, tuple(gens.matrices))


def trivial(genus: int, generators: Optional[SpGeneratorSet] = None) -> Representation:
    gens = generators or sp_generators(genus)
    return Representation("Q", 1, tuple(Mat.identity(1) for _ in gens.matrices))


def direct_sum(*reps: Representation) -> Representation:
    """Block-diagonal sum; all summands must share the generator count."""
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    count = len(reps[0].matrices)
    if any(len(r.matrices) != count for r in reps):
        raise ValueError("summands are given on different generator sets")
    dim = sum(r.dim for r in reps)
    blocks = []
    for k in range(count):
        rows: List[List[Fraction]] = []
        offset = 0
        for r in reps:
            for row in r.matrices[k]:
                rows.append([Fraction(0)] * offset + list(row) + [Fraction(0)] * (dim - offset - r.dim))
            offset += r.dim
        blocks.append(Mat(rows, cols=dim))
    return Representation(" + ".join(r.name for r in reps), dim, tuple(blocks))


def copies(genus: int, count: int, generators: Optional[SpGeneratorSet] = None) -> Representation:
    """``H^(+count)`` with the diagonal action."""
    h = standard(genus, generators)
    rep = direct_sum(*([h] * count))
    return Representation(f"H^{count}", rep.dim, rep.matrices)


def equivariant_maps(v: Representation, w: Representation) -> List[Mat]:
    """
    Basis of the linear maps ``f: V -> W`` with ``f rho_V(M) = rho_W(M) f``
    for every generator ``M``.

    Unknowns are the entries ``f[r][c]``, flattened row-major; each generator
    contributes ``dim W * dim V`` equations and the basis is the kernel of the
    stacked system.

    Returns:
        ``dim W x dim V`` matrices.
    """
    if len(v.matrices) != len(w.matrices):
        raise ValueError("representations are given on different generator sets")
    nv, nw = v.dim, w.dim
    equations: List[List[Fraction]] = []
    for mv, mw in zip(v.matrices, w.matrices):
        for r in range(nw):
            for c in range(nv):
                row = [Fraction(0)] * (nw * nv)
                for k in range(nv):
                    if mv[k, c]:
                        row[r * nv + k] += mv[k, c]
                for k in range(nw):
                    if mw[r, k]:
                        row[k * nv + c] -= mw[r, k]
                if any(row):
                    equations.append(row)
    if not equations:
        equations.append([Fraction(0)] * (nw * nv))
    basis = kernel_basis(Mat(equations, cols=nw * nv))
    maps = [Mat((vec[r * nv:(r + 1) * nv] for r in range(nw)), cols=nv) for vec in basis]
    logger.info(f"Hom({v.name}, {w.name}) is {len(maps)}-dimensional")
    return maps


def intertwiner_dimension(v: Representation, w: Representation) -> int:
    return len(equivariant_maps(v, w))


def schur_table(genus: int, max_copies: int = 3) -> List[Tuple[str, str, int]]:
    """Intertwiner dimensions for (H, H), (H, Q), (Q, Q) and (H, H^c)."""
    gens = sp_generators(genus)
    h = standard(genus, gens)
    q = trivial(genus, gens)
    pairs: Sequence[Tuple[Representation, Representation]] = [(h, h), (h, q), (q, q)] + [
        (h, copies(genus, c, gens)) for c in range(2, max_copies + 1)
    ]
    return [(a.name, b.name, intertwiner_dimension(a, b)) for a, b in pairs]
