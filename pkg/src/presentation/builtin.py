"""
Built-in presentations.

Four families are provided:

- ``labute``: one copy of H in weight -1 modulo Theta.
- ``punctured_surface``: H plus puncture classes ``z_1..z_n`` in weight -2
  modulo ``Theta + sum_j z_j``.
- ``hain_config``: ``n`` copies of H modulo the symmetry relations
  ``[u^i, v^j] - [u^j, v^i]`` (i < j), the pairing relations
  ``[u^i, v^j] - (<u, v>/g) Theta_ij`` (i != j) and
  ``Theta_i + (1/g) sum_{j != i} Theta_ij``.
- ``partial_config``: ``hain_config`` on copies ``0..n`` with
  ``Theta_0j`` killed for every ``j`` in the filled set.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from sympy import divisors

from ..core.errors import UsageError
from ..freelie.algebra import DEFAULT_WEIGHT_FLOOR, FreeLieAlgebra
from ..freelie.hall import HallOrder, mobius
from ..symplectic.space import SymplecticSpace, theta, theta_pair
from .graded import GradedPresentation, Relation

logger = logging.getLogger(__name__)


class PresentationKind(Enum):
    """Built-in presentation families."""

    LABUTE = "labute"
    PUNCTURED_SURFACE = "punctured_surface"
    HAIN_CONFIG = "hain_config"
    PARTIAL_CONFIG = "partial_config"

    @classmethod
    def from_string(cls, value: str) -> "PresentationKind":
        """
        Parse a kind name; accepts ``hain``, ``punctured`` and ``partial`` and
        dashes in place of underscores.

        Raises:
            UsageError: If the name is unknown.
        """
        name = value.strip().lower().replace("-", "_")
        aliases = {"hain": "hain_config", "punctured": "punctured_surface", "partial": "partial_config"}
        try:
            return cls(aliases.get(name, name))
        except ValueError:
            raise UsageError(f"unknown presentation kind {value!r}") from None


def _check_genus(genus: int, minimum: int) -> None:
    if genus < minimum:
        raise UsageError(f"genus must be >= {minimum}, got {genus}")


def labute(genus: int, weight_floor: int = DEFAULT_WEIGHT_FLOOR, order: HallOrder = HallOrder.STANDARD) -> GradedPresentation:
    """``L(H) / (Theta)`` on copy 0."""
    _check_genus(genus, 1)
    space = SymplecticSpace(genus)
    algebra = FreeLieAlgebra(space.alphabet([0]), weight_floor, order)
    relations = [Relation("theta[0]", theta(space, algebra, 0))]
    return GradedPresentation(algebra, relations, space, {"kind": "labute", "genus": genus, "n": 0, "filled": []})


def punctured_surface(
    genus: int, n: int, weight_floor: int = DEFAULT_WEIGHT_FLOOR, order: HallOrder = HallOrder.STANDARD
) -> GradedPresentation:
    """H in weight -1, ``z_1..z_n`` in weight -2, relation ``Theta + sum_j z_j``."""
    _check_genus(genus, 1)
    if n < 0:
        raise UsageError(f"number of punctures must be >= 0, got {n}")
    space = SymplecticSpace(genus)
    algebra = FreeLieAlgebra(space.alphabet([0], punctures=n), weight_floor, order)
    element = theta(space, algebra, 0)
    for k in range(1, n + 1):
        element = element + algebra.gen(f"z{k}", 0)
    relations = [Relation("surface", element)]
    return GradedPresentation(
        algebra, relations, space, {"kind": "punctured_surface", "genus": genus, "n": n, "filled": []}
    )


def _config_relations(space: SymplecticSpace, algebra: FreeLieAlgebra, copies: Sequence[int]) -> List[Relation]:
    g = space.genus
    labels = space.labels
    inv_g = Fraction(1, g)
    thetas: List[Relation] = []
    for i in copies:
        element = theta(space, algebra, i)
        for j in copies:
            if j != i:
                element = element + inv_g * theta_pair(space, algebra, i, j)
        thetas.append(Relation(f"theta[{i}]", element))

    symmetric: List[Relation] = []
    for x, i in enumerate(copies):
        for j in copies[x + 1:]:
            for s, u in enumerate(labels):
                for v in labels[s:]:
                    element = algebra.bracket(algebra.gen(u, i), algebra.gen(v, j)) - algebra.bracket(
                        algebra.gen(u, j), algebra.gen(v, i)
                    )
                    symmetric.append(Relation(f"sym[{u},{v},{i},{j}]", element))

    pairing: List[Relation] = []
    for i in copies:
        for j in copies:
            if i == j:
                continue
            pair = theta_pair(space, algebra, i, j)
            for u in labels:
                for v in labels:
                    element = algebra.bracket(algebra.gen(u, i), algebra.gen(v, j))
                    form = space.label_pairing(u, v)
                    if form:
                        element = element - (form * inv_g) * pair
                    pairing.append(Relation(f"pair[{u},{v},{i},{j}]", element))
    return thetas + symmetric + pairing


def hain_config(
    genus: int,
    n: int,
    weight_floor: int = DEFAULT_WEIGHT_FLOOR,
    order: HallOrder = HallOrder.STANDARD,
    first_copy: int = 1,
) -> GradedPresentation:
    """
    Configuration-space presentation on copies ``first_copy .. first_copy + n - 1``.

    Raises:
        UsageError: If ``genus < 2`` or ``n < 1``.
    """
    _check_genus(genus, 2)
    if n < 1:
        raise UsageError(f"hain_config needs n >= 1, got {n}")
    space = SymplecticSpace(genus)
    copies = list(range(first_copy, first_copy + n))
    algebra = FreeLieAlgebra(space.alphabet(copies), weight_floor, order)
    relations = _config_relations(space, algebra, copies)
    descriptor = {"kind": "hain_config", "genus": genus, "n": n, "filled": [], "copies": copies}
    return GradedPresentation(algebra, relations, space, descriptor)


def partial_config(
    genus: int,
    n: int,
    filled: Iterable[int],
    weight_floor: int = DEFAULT_WEIGHT_FLOOR,
    order: HallOrder = HallOrder.STANDARD,
) -> GradedPresentation:
    """
    ``hain_config`` on copies ``0..n`` with ``Theta_0j`` killed for ``j`` in ``filled``.

    Raises:
        UsageError: If ``filled`` is not a subset of ``{1..n}``.
    """
    filled_set = sorted(set(filled))
    if any(j < 1 or j > n for j in filled_set):
        raise UsageError(f"filled copies must lie in 1..{n}, got {filled_set}")
    base = hain_config(genus, n + 1, weight_floor, order, first_copy=0)
    algebra = base.algebra
    extra = [Relation(f"fill[0,{j}]", theta_pair(base.space, algebra, 0, j)) for j in filled_set]
    descriptor = {"kind": "partial_config", "genus": genus, "n": n, "filled": filled_set, "copies": list(range(n + 1))}
    return GradedPresentation(algebra, base.relations + extra, base.space, descriptor)


def builtin_presentation(
    kind,
    genus: int,
    n: int = 0,
    filled: Optional[Iterable[int]] = None,
    weight_floor: int = DEFAULT_WEIGHT_FLOOR,
    order: HallOrder = HallOrder.STANDARD,
) -> GradedPresentation:
    """
    Build one of the built-in presentations.

    Args:
        kind: A :class:`PresentationKind` or its name.
        genus: g.
        n: Number of copies or punctures; ignored by ``labute``.
        filled: Copies whose ``Theta_0j`` is killed (``partial_config`` only).
        weight_floor: Truncation weight.
        order: Hall order.

    Raises:
        UsageError: On invalid kind or parameter combinations.
    """
    if not isinstance(kind, PresentationKind):
        kind = PresentationKind.from_string(str(kind))
    filled = list(filled or [])
    if filled and kind is not PresentationKind.PARTIAL_CONFIG:
        raise UsageError(f"filled copies only apply to partial_config, not {kind.value}")
    if kind is PresentationKind.LABUTE:
        return labute(genus, weight_floor, order)
    if kind is PresentationKind.PUNCTURED_SURFACE:
        return punctured_surface(genus, n, weight_floor, order)
    if kind is PresentationKind.HAIN_CONFIG:
        return hain_config(genus, n, weight_floor, order)
    _check_genus(genus, 2)
    if n < 1:
        raise UsageError(f"partial_config needs n >= 1, got {n}")
    return partial_config(genus, n, filled, weight_floor, order)


def labute_dimension(genus: int, k: int) -> int:
    """
    Dimension of the weight ``-k`` part of ``L(H) / (Theta)``.

    With ``p_d`` the power sums of the roots of ``x^2 - 2g x + 1``,
    ``k * dim_k = sum over d | k of mobius(k/d) * p_d``.
    """
    if genus < 1 or k < 1:
        raise ValueError(f"labute_dimension needs genus >= 1 and k >= 1, got genus={genus}, k={k}")
    power_sums = [2, 2 * genus]
    while len(power_sums) <= k:
        power_sums.append(2 * genus * power_sums[-1] - power_sums[-2])
    total = sum(mobius(k // d) * power_sums[d] for d in divisors(k))
    return total // k
