"""
Finitely presented weight-graded Lie algebras.

A :class:`GradedPresentation` is a free Lie algebra (alphabet, floor and
Hall order) together with homogeneous relations. :func:`build_quotient`
computes, weight by weight, the relation ideal as an echelon basis in Hall
coordinates and takes the non-pivot Hall words as the quotient basis.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..exactla.matrix import EchelonBasis, Mat, Scalar, Vector, to_fraction
from ..freelie.algebra import FreeLieAlgebra, LieElement
from ..freelie.alphabet import Alphabet
from ..freelie.hall import HallWord
from ..symplectic.space import SymplecticSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    """A labelled homogeneous relation."""

    label: str
    element: LieElement

    @property
    def weight(self) -> Optional[int]:
        return self.element.weight


@dataclass
class GradedPresentation:
    """
    Weighted alphabet plus homogeneous relations.

    Attributes:
        algebra: The free Lie algebra carrying alphabet, floor and Hall order.
        relations: Relations in their fixed enumeration order.
        space: The symplectic space when the generators are copies of H.
        descriptor: Kind and parameters, used for serialization and caching.
    """

    algebra: FreeLieAlgebra
    relations: List[Relation]
    space: Optional[SymplecticSpace] = None
    descriptor: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for rel in self.relations:
            if rel.element.algebra is not self.algebra:
                raise ValueError(f"relation {rel.label} lives in a different free Lie algebra")
            rel.weight  # raises on inhomogeneous relations

    @property
    def alphabet(self) -> Alphabet:
        return self.algebra.alphabet

    @property
    def weight_floor(self) -> int:
        return self.algebra.weight_floor

    def relation(self, label: str) -> Relation:
        for rel in self.relations:
            if rel.label == label:
                return rel
        raise KeyError(f"no relation labelled {label!r}")

    def relations_of_weight(self, weight: int) -> List[Relation]:
        return [r for r in self.relations if r.weight == weight]

    def without(self, label: str) -> "GradedPresentation":
        """A copy with one relation removed."""
        kept = [r for r in self.relations if r.label != label]
        if len(kept) == len(self.relations):
            raise KeyError(f"no relation labelled {label!r}")
        descriptor = dict(self.descriptor, removed=sorted(self.descriptor.get("removed", []) + [label]))
        return GradedPresentation(self.algebra, kept, self.space, descriptor)


def _ideal_components(p: GradedPresentation, lowest: int) -> Dict[int, EchelonBasis]:
    algebra = p.algebra
    generators = [g for g in algebra.alphabet if g.weight >= algebra.weight_floor]
    components: Dict[int, EchelonBasis] = {}
    for w in range(-1, lowest - 1, -1):
        basis = EchelonBasis(algebra.dimension(w))
        for rel in p.relations_of_weight(w):
            basis.add(algebra.sparse_vector(rel.element, w))
        for gen in generators:
            source = components.get(w - gen.weight)
            if source is None:
                continue
            x = algebra.element(gen)
            for pivot in source.pivots:
                e = algebra.from_vector(source.row(pivot), w - gen.weight)
                basis.add(algebra.sparse_vector(algebra.bracket(e, x), w))
        components[w] = basis
        logger.debug(f"ideal at weight {w}: rank {basis.rank} of {basis.ncols}")
    return components


def ideal_component(p: GradedPresentation, weight: int) -> EchelonBasis:
    """
    The weight-``weight`` part of the ideal generated by the relations.

    The part at weight ``w`` is spanned by the relations of weight ``w`` and
    the brackets ``[e, x]`` of basis elements ``e`` of the ideal at weight
    ``w - wt(x)`` with generators ``x``.

    Raises:
        ValueError: If ``weight`` is outside ``[weight_floor, -1]``.
    """
    if not p.weight_floor <= weight <= -1:
        raise ValueError(f"weight {weight} outside [{p.weight_floor}, -1]")
    return _ideal_components(p, weight)[weight]


@dataclass
class QuotientComponent:
    """One graded piece: Hall words, ideal echelon basis and quotient basis."""

    weight: int
    words: Tuple[HallWord, ...]
    ideal: EchelonBasis
    basis_positions: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis_positions)

    @property
    def free_dimension(self) -> int:
        return len(self.words)

    @property
    def basis_words(self) -> List[HallWord]:
        return [self.words[i] for i in self.basis_positions]


class GradedQuotient:
    """
    Per-weight bases and structure constants of ``free / ideal``.

    Coset representatives are the Hall words outside the pivot columns of
    the ideal, in Hall order.
    """

    def __init__(self, presentation: GradedPresentation, components: Mapping[int, QuotientComponent]):
        self.presentation = presentation
        self.algebra = presentation.algebra
        self._components = dict(components)
        self._coordinate: Dict[int, Dict[int, int]] = {
            w: {pos: i for i, pos in enumerate(c.basis_positions)} for w, c in self._components.items()
        }
        self._structure: Dict[Tuple[int, int], Dict[Tuple[int, int], Vector]] = {}

    @property
    def weight_floor(self) -> int:
        return self.presentation.weight_floor

    def weights(self) -> List[int]:
        return sorted(self._components, reverse=True)

    def component(self, weight: int) -> QuotientComponent:
        try:
            return self._components[weight]
        except KeyError:
            raise ValueError(f"weight {weight} outside [{self.weight_floor}, -1]") from None

    def dimension(self, weight: int) -> int:
        return self.component(weight).dimension

    def graded_dims(self) -> Dict[int, int]:
        return {w: self._components[w].dimension for w in self.weights()}

    def basis(self, weight: int) -> List[LieElement]:
        return [self.algebra.word_element(word) for word in self.component(weight).basis_words]

    def project(self, elem: LieElement, weight: Optional[int] = None) -> Vector:
        """
        Coordinates of the coset of ``elem`` in the quotient basis.

        Args:
            elem: A homogeneous element.
            weight: Required when ``elem`` is zero; otherwise must match.

        Raises:
            ValueError: If the weight is out of range or does not match.
        """
        w = elem.weight
        if w is None:
            if weight is None:
                raise ValueError("weight must be given to project the zero element")
            w = weight
        elif weight is not None and weight != w:
            raise ValueError(f"element has weight {w}, expected {weight}")
        comp = self.component(w)
        residual = comp.ideal.reduce(self.algebra.sparse_vector(elem, w))
        coords = [Fraction(0)] * comp.dimension
        index = self._coordinate[w]
        for pos, c in residual.items():
            coords[index[pos]] = c
        return tuple(coords)

    def kills(self, elem: LieElement) -> bool:
        """True when ``elem`` lies in the ideal."""
        w = elem.weight
        if w is None:
            return True
        return not any(self.project(elem, w))

    def lift(self, coords: Sequence[Scalar], weight: int) -> LieElement:
        """The representative ``sum_i coords[i] * basis_i``."""
        comp = self.component(weight)
        if len(coords) != comp.dimension:
            raise ValueError(f"expected {comp.dimension} coordinates at weight {weight}, got {len(coords)}")
        positions = comp.basis_positions
        return self.algebra.from_vector({positions[i]: to_fraction(c) for i, c in enumerate(coords) if c}, weight)

    def projection_matrix(self, weight: int) -> Mat:
        """Matrix of ``project`` on the free weight-``weight`` component, columns indexed by Hall words."""
        comp = self.component(weight)
        columns = [self.project(self.algebra.word_element(word), weight) for word in comp.words]
        return Mat.from_columns(columns, comp.dimension)

    def bracket(self, x: Sequence[Scalar], wx: int, y: Sequence[Scalar], wy: int) -> Optional[Vector]:
        """
        Bracket of two quotient classes, or None when ``wx + wy`` is below the floor.
        """
        w = wx + wy
        if w < self.weight_floor:
            return None
        return self.project(self.algebra.bracket(self.lift(x, wx), self.lift(y, wy)), w)

    def structure_constants(self, w1: int, w2: int) -> Dict[Tuple[int, int], Vector]:
        """
        ``{(i, j): coordinates of [e_i, f_j]}`` for basis elements ``e_i`` of
        weight ``w1`` and ``f_j`` of weight ``w2``; empty below the floor.
        """
        key = (w1, w2)
        table = self._structure.get(key)
        if table is not None:
            return table
        table = {}
        if w1 + w2 >= self.weight_floor:
            left = self.basis(w1)
            right = self.basis(w2)
            for i, e in enumerate(left):
                for j, f in enumerate(right):
                    table[(i, j)] = self.project(self.algebra.bracket(e, f), w1 + w2)
        self._structure[key] = table
        return table

    def check_antisymmetry(self) -> bool:
        for w1 in self.weights():
            for w2 in self.weights():
                if w1 + w2 < self.weight_floor:
                    continue
                forward = self.structure_constants(w1, w2)
                backward = self.structure_constants(w2, w1)
                for (i, j), v in forward.items():
                    if any(a + b for a, b in zip(v, backward[(j, i)])):
                        return False
        return True

    def check_jacobi(self, limit: Optional[int] = None) -> bool:
        """
        Jacobi identity on basis triples whose total weight stays above the floor.

        Args:
            limit: Stop after this many triples; None checks all of them.
        """
        checked = 0
        for w1 in self.weights():
            for w2 in self.weights():
                for w3 in self.weights():
                    if w1 + w2 + w3 < self.weight_floor:
                        continue
                    for x in self.basis(w1):
                        for y in self.basis(w2):
                            for z in self.basis(w3):
                                total = (
                                    self.algebra.bracket(self.algebra.bracket(x, y), z)
                                    + self.algebra.bracket(self.algebra.bracket(y, z), x)
                                    + self.algebra.bracket(self.algebra.bracket(z, x), y)
                                )
                                if not self.kills(total):
                                    logger.error(f"Jacobi fails on ({x}, {y}, {z})")
                                    return False
                                checked += 1
                                if limit is not None and checked >= limit:
                                    return True
        return True


def build_quotient(p: GradedPresentation) -> GradedQuotient:
    """
    Compute every graded piece of ``p`` from weight -1 down to its floor.
    """
    algebra = p.algebra
    ideals = _ideal_components(p, p.weight_floor)
    components: Dict[int, QuotientComponent] = {}
    for w, ideal in ideals.items():
        pivots = set(ideal.pivots)
        words = algebra.words(w)
        basis_positions = tuple(i for i in range(len(words)) if i not in pivots)
        components[w] = QuotientComponent(w, words, ideal, basis_positions)
    quotient = GradedQuotient(p, components)
    logger.info(f"Built quotient {p.descriptor.get('kind', 'custom')}: dims {quotient.graded_dims()}")
    return quotient


def graded_dims(q: GradedQuotient) -> Dict[int, int]:
    return q.graded_dims()


def project(q: GradedQuotient, elem: LieElement, weight: Optional[int] = None) -> Vector:
    return q.project(elem, weight)
