"""
The symplectic module H and its copies.

The basis of H is ordered ``(a1, ..., ag, b1, ..., bg)`` and the intersection
form is ``J = [[0, I], [-I, 0]]``, so ``<a_i, b_j> = delta_ij``. Copy ``j`` of
H contributes the weight -1 generators ``a_l^j`` and ``b_l^j`` to an
alphabet; puncture classes ``z_k`` live in copy 0 with weight -2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from ..core.errors import IntegrityError, UsageError
from ..exactla.matrix import Mat, Scalar, Vector, to_fraction
from ..freelie.alphabet import Alphabet, Generator
from ..freelie.algebra import FreeLieAlgebra, LieElement, LieHomomorphism

logger = logging.getLogger(__name__)

PUNCTURE_LABEL = "z"


class SymplecticSpace:
    """
    Genus-``g`` symplectic vector space with its standard basis and form.

    Args:
        genus: g >= 1.
    """

    def __init__(self, genus: int):
        if genus < 1:
            raise UsageError(f"genus must be >= 1, got {genus}")
        self._genus = genus
        self._labels = tuple(f"a{l}" for l in range(1, genus + 1)) + tuple(f"b{l}" for l in range(1, genus + 1))
        self._index = {label: i for i, label in enumerate(self._labels)}
        rows = []
        for i in range(2 * genus):
            row = [0] * (2 * genus)
            if i < genus:
                row[i + genus] = 1
            else:
                row[i - genus] = -1
            rows.append(row)
        self._form = Mat(rows)

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def dim(self) -> int:
        return 2 * self._genus

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def form(self) -> Mat:
        return self._form

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymplecticSpace) and other.genus == self._genus

    def __hash__(self) -> int:
        return hash(("SymplecticSpace", self._genus))

    def __repr__(self) -> str:
        return f"SymplecticSpace(genus={self._genus})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a basis label of genus {self._genus}") from None

    def basis_vector(self, label: str) -> Vector:
        v = [Fraction(0)] * self.dim
        v[self.index(label)] = Fraction(1)
        return tuple(v)

    def vector(self, coefficients: Dict[str, Scalar]) -> Vector:
        """Vector from a ``{label: coefficient}`` mapping."""
        v = [Fraction(0)] * self.dim
        for label, c in coefficients.items():
            v[self.index(label)] += to_fraction(c)
        return tuple(v)

    def pairing(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Fraction:
        """``<x, y> = x^T J y``."""
        jy = self._form.matvec(y)
        return sum((to_fraction(a) * b for a, b in zip(x, jy)), Fraction(0))

    def label_pairing(self, u: str, v: str) -> Fraction:
        return self._form[self.index(u), self.index(v)]

    def is_symplectic(self, m: Mat) -> bool:
        """True when ``m`` is an integral matrix with ``m^T J m = J``."""
        if m.shape != (self.dim, self.dim):
            return False
        if any(x.denominator != 1 for row in m for x in row):
            return False
        return m.transpose() @ self._form @ m == self._form

    def alphabet(self, copies: Sequence[int], punctures: int = 0) -> Alphabet:
        """
        Alphabet with one copy of H per entry of ``copies``, then ``punctures``
        generators ``z1..zp`` of weight -2 in copy 0.
        """
        gens: List[Generator] = [Generator(label, j, -1) for j in copies for label in self._labels]
        gens.extend(Generator(f"{PUNCTURE_LABEL}{k}", 0, -2) for k in range(1, punctures + 1))
        return Alphabet(gens)


def transvection(space: SymplecticSpace, v: Sequence[Scalar]) -> Mat:
    """Matrix of ``T_v(x) = x + <x, v> v``."""
    vec = [to_fraction(x) for x in v]
    jv = space.form.matvec(vec)
    n = space.dim
    return Mat(((1 if i == k else 0) + jv[k] * vec[i] for k in range(n)) for i in range(n))


def handle_rotation(space: SymplecticSpace) -> Mat:
    """The permutation ``a_l -> a_(l+1)``, ``b_l -> b_(l+1)`` with indices mod g."""
    g = space.genus
    n = space.dim
    rows = [[0] * n for _ in range(n)]
    for k in range(n):
        half, l = divmod(k, g)
        rows[half * g + (l + 1) % g][k] = 1
    return Mat(rows)


@dataclass(frozen=True)
class SpGeneratorSet:
    """
    Named integral generators of ``Sp_2g(Z)``.

    For g = 1 these are the transvections along ``a1`` and ``b1``, which
    generate ``SL_2(Z)``. For g >= 2 the set is ``T_a1``, ``T_b1``,
    ``T_(a1 - a2)`` and the handle rotation ``P``. Conjugating the three
    transvections by powers of ``P`` gives the transvections along every
    ``a_l``, ``b_l`` and ``a_l - a_(l+1)``, which are the images of the
    Lickorish Dehn twists and therefore generate ``Sp_2g(Z)``.
    """

    space: SymplecticSpace
    names: Tuple[str, ...]
    matrices: Tuple[Mat, ...]

    def __iter__(self) -> Iterator[Mat]:
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    def items(self) -> List[Tuple[str, Mat]]:
        return list(zip(self.names, self.matrices))


def sp_generators(genus: int) -> SpGeneratorSet:
    """
    The documented generating set of ``Sp_2g(Z)``; every member is checked
    against the form.

    Raises:
        UsageError: If ``genus < 1``.
        IntegrityError: If a generator fails to preserve the form.
    """
    space = SymplecticSpace(genus)
    named = [
        ("T_a1", transvection(space, space.basis_vector("a1"))),
        ("T_b1", transvection(space, space.basis_vector("b1"))),
    ]
    if genus >= 2:
        named.append(("T_a1-a2", transvection(space, space.vector({"a1": 1, "a2": -1}))))
        named.append(("P", handle_rotation(space)))
    for name, m in named:
        if not space.is_symplectic(m):
            raise IntegrityError(f"generator {name} does not preserve the symplectic form")
    return SpGeneratorSet(space, tuple(n for n, _ in named), tuple(m for _, m in named))


def _check_copy(algebra: FreeLieAlgebra, space: SymplecticSpace, copy: int) -> None:
    if copy not in algebra.alphabet.copies():
        raise UsageError(f"copy {copy} is not present in the alphabet")
    for label in space.labels:
        algebra.alphabet.lookup(label, copy)


def theta(space: SymplecticSpace, algebra: FreeLieAlgebra, copy: int) -> LieElement:
    """``Theta_i = sum_l [a_l^i, b_l^i]``."""
    _check_copy(algebra, space, copy)
    g = space.genus
    return algebra.linear_combination(
        (1, algebra.bracket(algebra.gen(f"a{l}", copy), algebra.gen(f"b{l}", copy))) for l in range(1, g + 1)
    )


def theta_pair(space: SymplecticSpace, algebra: FreeLieAlgebra, i: int, j: int) -> LieElement:
    """
    ``Theta_ij = sum_l [a_l^i, b_l^j]``.

    Raises:
        UsageError: If ``i == j`` or a copy is missing.
    """
    if i == j:
        raise UsageError(f"theta_pair needs distinct copies, got ({i}, {j})")
    _check_copy(algebra, space, i)
    _check_copy(algebra, space, j)
    g = space.genus
    return algebra.linear_combination(
        (1, algebra.bracket(algebra.gen(f"a{l}", i), algebra.gen(f"b{l}", j))) for l in range(1, g + 1)
    )


class CopyAction:
    """
    Diagonal action of symplectic matrices on a free Lie algebra.

    A matrix ``M`` sends ``x_k^j`` to ``sum_i M[i, k] x_i^j`` in every copy
    ``j`` and fixes every generator that is not a basis vector of H (the
    weight -2 puncture classes).
    """

    def __init__(self, space: SymplecticSpace, algebra: FreeLieAlgebra):
        self.space = space
        self.algebra = algebra
        self._homs: Dict[Mat, LieHomomorphism] = {}

    def homomorphism(self, matrix: Mat) -> LieHomomorphism:
        hom = self._homs.get(matrix)
        if hom is not None:
            return hom
        if matrix.shape != (self.space.dim, self.space.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match dim H = {self.space.dim}")
        algebra = self.algebra
        labels = self.space.labels
        images: Dict[Generator, LieElement] = {}
        for gen in algebra.alphabet:
            if gen.weight == -1 and gen.label in labels:
                k = self.space.index(gen.label)
                images[gen] = algebra.linear_combination(
                    (matrix[i, k], algebra.gen(labels[i], gen.copy)) for i in range(self.space.dim) if matrix[i, k]
                )
            else:
                images[gen] = algebra.element(gen)
        hom = algebra.homomorphism(images)
        self._homs[matrix] = hom
        return hom

    def act(self, matrix: Mat, elem: LieElement) -> LieElement:
        """
        Apply ``matrix`` to ``elem`` as a Lie algebra automorphism.

        Raises:
            ValueError: If the matrix is not ``2g x 2g``.
        """
        return self.homomorphism(matrix)(elem)


def act(matrix: Mat, elem: LieElement, action: CopyAction) -> LieElement:
    return action.act(matrix, elem)
