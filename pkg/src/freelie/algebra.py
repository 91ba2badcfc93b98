"""
Free Lie algebras in a Hall basis.

This module provides :class:`FreeLieAlgebra`, which owns the Hall words of
a weighted alphabet down to a weight floor, and :class:`LieElement`, a finite
rational combination of those words. Brackets are rewritten into the Hall
basis with antisymmetry and the Jacobi collection step; anything whose
weight falls below the floor is dropped.
"""

import logging
import threading
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..exactla.matrix import Scalar, SparseVector, Vector, to_fraction
from .alphabet import Alphabet, Generator
from .hall import HallOrder, HallWord, hall_condition

logger = logging.getLogger(__name__)

DEFAULT_WEIGHT_FLOOR = -4


class LieElement:
    """
    Finite rational linear combination of Hall words of one algebra.

    Zero coefficients are never stored. Elements are immutable; arithmetic
    returns new elements.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: "FreeLieAlgebra", terms: Optional[Mapping[HallWord, Fraction]] = None):
        self.algebra = algebra
        self._terms: Dict[HallWord, Fraction] = {w: c for w, c in (terms or {}).items() if c}

    @property
    def terms(self) -> Dict[HallWord, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[HallWord, Fraction]]:
        """Terms in Hall order."""
        return sorted(self._terms.items(), key=lambda t: t[0].key)

    def coefficient(self, word: HallWord) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def weights(self) -> List[int]:
        return sorted({w.weight for w in self._terms}, reverse=True)

    @property
    def weight(self) -> Optional[int]:
        """
        The weight of a homogeneous element, or None for zero.

        Raises:
            ValueError: If the element mixes weights.
        """
        ws = self.weights()
        if not ws:
            return None
        if len(ws) > 1:
            raise ValueError(f"element is not homogeneous (weights {ws})")
        return ws[0]

    def component(self, weight: int) -> "LieElement":
        return LieElement(self.algebra, {w: c for w, c in self._terms.items() if w.weight == weight})

    def _check(self, other: "LieElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("cannot combine elements of different free Lie algebras")

    def __add__(self, other: "LieElement") -> "LieElement":
        if not isinstance(other, LieElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return LieElement(self.algebra, out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        if not isinstance(other, LieElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement(self.algebra, {w: -c for w, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> "LieElement":
        if isinstance(scalar, LieElement):
            return NotImplemented
        s = to_fraction(scalar)
        if not s:
            return LieElement(self.algebra)
        return LieElement(self.algebra, {w: s * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "LieElement":
        return self * (1 / to_fraction(scalar))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.algebra is other.algebra and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, c in self.items():
            if c == 1:
                parts.append(f"+{word}")
            elif c == -1:
                parts.append(f"-{word}")
            else:
                sign = "+" if c > 0 else "-"
                parts.append(f"{sign}{abs(c)}*{word}")
        text = " ".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"LieElement({self})"


Expression = Union[Generator, HallWord, LieElement, Tuple[Any, Any], Sequence[Tuple[Scalar, Any]]]


class FreeLieAlgebra:
    """
    Free Lie algebra on a weighted alphabet, truncated below ``weight_floor``.

    Hall words are generated lazily one weight at a time and interned, so
    two words are equal exactly when they are the same object. The algebra
    is safe to share between threads.

    Args:
        alphabet: The generators and their order.
        weight_floor: Lowest weight kept; everything deeper is zero.
        order: Generator ranking used by the Hall order.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        weight_floor: int = DEFAULT_WEIGHT_FLOOR,
        order: HallOrder = HallOrder.STANDARD,
    ):
        if weight_floor > -1:
            raise ValueError(f"weight_floor must be <= -1, got {weight_floor}")
        self._alphabet = alphabet
        self._floor = weight_floor
        self._order = order
        self._lock = threading.RLock()
        self._counter = 0
        self._leaves: Dict[Generator, HallWord] = {}
        self._nodes: Dict[Tuple[int, int], HallWord] = {}
        self._tables: Dict[int, Tuple[HallWord, ...]] = {}
        self._bracket_cache: Dict[Tuple[int, int], Dict[HallWord, Fraction]] = {}
        size = len(alphabet)
        for gen in alphabet:
            if gen.weight >= weight_floor:
                self._leaves[gen] = self._new_word(gen, None, None, order.rank(alphabet.ordinal(gen), size))
        logger.debug(
            f"FreeLieAlgebra on {size} generators, floor {weight_floor}, order {order.value}"
        )

    def _new_word(self, gen, left, right, rank: int = 0) -> HallWord:
        word = HallWord(gen, left, right, rank=rank, index=self._counter)
        self._counter += 1
        return word

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def weight_floor(self) -> int:
        return self._floor

    @property
    def order(self) -> HallOrder:
        return self._order

    def weight_range(self) -> List[int]:
        """Weights from -1 down to the floor."""
        return list(range(-1, self._floor - 1, -1))

    # Hall tables

    def words(self, weight: int) -> Tuple[HallWord, ...]:
        """
        Hall words of exactly ``weight``, in Hall order.

        Raises:
            ValueError: If ``weight`` is outside ``[weight_floor, -1]``.
        """
        table = self._tables.get(weight)
        if table is not None:
            return table
        if not self._floor <= weight <= -1:
            raise ValueError(f"weight {weight} outside [{self._floor}, -1]")
        with self._lock:
            for w in range(-1, weight - 1, -1):
                if w not in self._tables:
                    self._build_table(w)
            return self._tables[weight]

    def _build_table(self, weight: int) -> None:
        found = [leaf for gen, leaf in self._leaves.items() if gen.weight == weight]
        for w1 in range(-1, weight, -1):
            w2 = weight - w1
            if w2 > -1:
                continue
            for u in self._tables[w1]:
                for v in self._tables[w2]:
                    if hall_condition(u, v):
                        node = self._new_word(None, u, v)
                        self._nodes[(u.index, v.index)] = node
                        found.append(node)
        found.sort(key=lambda word: word.key)
        for i, word in enumerate(found):
            word.position = i
        self._tables[weight] = tuple(found)
        logger.debug(f"Hall table at weight {weight}: {len(found)} words")

    def dimension(self, weight: int) -> int:
        return len(self.words(weight))

    def all_words(self) -> List[HallWord]:
        """Every Hall word, weight -1 first and deeper weights after, each block in Hall order."""
        out: List[HallWord] = []
        for w in self.weight_range():
            out.extend(self.words(w))
        return out

    def leaf(self, gen: Generator) -> Optional[HallWord]:
        if gen not in self._alphabet:
            raise KeyError(f"generator {gen} is not in the alphabet")
        return self._leaves.get(gen)

    # Elements

    def zero(self) -> LieElement:
        return LieElement(self)

    def element(self, gen: Generator) -> LieElement:
        word = self.leaf(gen)
        return LieElement(self, {word: Fraction(1)} if word is not None else {})

    def gen(self, label: str, copy: int = 0) -> LieElement:
        """The element of the generator ``label^copy``."""
        return self.element(self._alphabet.lookup(label, copy))

    def word_element(self, word: HallWord) -> LieElement:
        return LieElement(self, {word: Fraction(1)})

    def bracket(self, x: Union[LieElement, Generator], y: Union[LieElement, Generator]) -> LieElement:
        """The Hall-basis normal form of ``[x, y]``."""
        x = self._as_element(x)
        y = self._as_element(y)
        out: Dict[HallWord, Fraction] = {}
        for u, a in x._terms.items():
            for v, b in y._terms.items():
                if u.weight + v.weight < self._floor:
                    continue
                ab = a * b
                for w, c in self._bracket_words(u, v).items():
                    out[w] = out.get(w, 0) + ab * c
        return LieElement(self, out)

    def _bracket_words(self, u: HallWord, v: HallWord) -> Dict[HallWord, Fraction]:
        key = (u.index, v.index)
        cached = self._bracket_cache.get(key)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._bracket_cache.get(key)
            if cached is None:
                cached = self._rewrite(u, v)
                self._bracket_cache[key] = cached
            return cached

    def _rewrite(self, u: HallWord, v: HallWord) -> Dict[HallWord, Fraction]:
        if u is v or u.weight + v.weight < self._floor:
            return {}
        if v < u:
            return {w: -c for w, c in self._bracket_words(v, u).items()}
        if u.is_leaf or u.right >= v:
            self.words(u.weight + v.weight)
            return {self._nodes[(u.index, v.index)]: Fraction(1)}
        # [[u1, u2], v] = [[u1, v], u2] + [u1, [u2, v]]
        u1 = self.word_element(u.left)
        u2 = self.word_element(u.right)
        ve = self.word_element(v)
        total = self.bracket(self.bracket(u1, ve), u2) + self.bracket(u1, self.bracket(u2, ve))
        return total._terms

    def _as_element(self, x: Union[LieElement, Generator, HallWord]) -> LieElement:
        if isinstance(x, LieElement):
            if x.algebra is not self:
                raise ValueError("element belongs to a different free Lie algebra")
            return x
        if isinstance(x, Generator):
            return self.element(x)
        if isinstance(x, HallWord):
            return self.word_element(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a Lie element")

    def normal_form(self, expr: Expression) -> LieElement:
        """
        Rewrite a formal bracket expression into the Hall basis.

        Args:
            expr: A Generator, HallWord or LieElement; a pair ``(x, y)``
                standing for ``[x, y]``; or a list of ``(coefficient, expr)``
                terms standing for their linear combination.

        Returns:
            The unique Hall-basis representative, truncated at the floor.
        """
        if isinstance(expr, (LieElement, Generator, HallWord)):
            return self._as_element(expr)
        if isinstance(expr, tuple) and len(expr) == 2:
            return self.bracket(self.normal_form(expr[0]), self.normal_form(expr[1]))
        if isinstance(expr, list):
            total = self.zero()
            for coeff, sub in expr:
                total = total + to_fraction(coeff) * self.normal_form(sub)
            return total
        raise TypeError(f"unsupported bracket expression {expr!r}")

    def linear_combination(self, terms: Iterable[Tuple[Scalar, LieElement]]) -> LieElement:
        out: Dict[HallWord, Fraction] = {}
        for coeff, elem in terms:
            c = to_fraction(coeff)
            for w, x in self._as_element(elem)._terms.items():
                out[w] = out.get(w, 0) + c * x
        return LieElement(self, out)

    # Coordinates

    def sparse_vector(self, elem: LieElement, weight: int) -> SparseVector:
        """Coordinates of the weight-``weight`` component as ``{position: coefficient}``."""
        self.words(weight)
        return {w.position: c for w, c in self._as_element(elem)._terms.items() if w.weight == weight}

    def to_vector(self, elem: LieElement, weight: int) -> Vector:
        dense = [Fraction(0)] * self.dimension(weight)
        for i, c in self.sparse_vector(elem, weight).items():
            dense[i] = c
        return tuple(dense)

    def from_vector(self, vec: Union[Sequence[Scalar], Mapping[int, Scalar]], weight: int) -> LieElement:
        table = self.words(weight)
        pairs = vec.items() if isinstance(vec, Mapping) else enumerate(vec)
        return LieElement(self, {table[i]: to_fraction(c) for i, c in pairs if c})

    def homomorphism(
        self,
        images: Mapping[Generator, LieElement],
        codomain: Optional["FreeLieAlgebra"] = None,
    ) -> "LieHomomorphism":
        """
        Extend a generator map to a Lie algebra homomorphism.

        Generators missing from ``images`` map to zero.
        """
        return LieHomomorphism(self, codomain or self, images)


class LieHomomorphism:
    """
    Lie algebra map between two free Lie algebras given on generators.

    Images of Hall words are memoized; calls are safe from several threads.
    """

    def __init__(self, domain: FreeLieAlgebra, codomain: FreeLieAlgebra, images: Mapping[Generator, LieElement]):
        self.domain = domain
        self.codomain = codomain
        self._images: Dict[Generator, LieElement] = {}
        for gen, image in images.items():
            if gen not in domain.alphabet:
                raise KeyError(f"generator {gen} is not in the domain alphabet")
            if image.algebra is not codomain:
                raise ValueError(f"image of {gen} does not live in the codomain")
            self._images[gen] = image
        self._cache: Dict[int, LieElement] = {}
        self._lock = threading.RLock()

    def image_of_generator(self, gen: Generator) -> LieElement:
        return self._images.get(gen, self.codomain.zero())

    def image_of_word(self, word: HallWord) -> LieElement:
        cached = self._cache.get(word.index)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._cache.get(word.index)
            if cached is None:
                if word.is_leaf:
                    cached = self.image_of_generator(word.generator)
                else:
                    cached = self.codomain.bracket(self.image_of_word(word.left), self.image_of_word(word.right))
                self._cache[word.index] = cached
            return cached

    def __call__(self, elem: LieElement) -> LieElement:
        elem = self.domain._as_element(elem)
        return self.codomain.linear_combination((c, self.image_of_word(w)) for w, c in elem._terms.items())


def hall_words(
    alphabet: Alphabet,
    weight_floor: int,
    order: HallOrder = HallOrder.STANDARD,
) -> List[HallWord]:
    """
    Hall words of total weight in ``[weight_floor, -1]``.

    Returns:
        Weight -1 first, then deeper weights, each block in Hall order.
    """
    if weight_floor > -1:
        raise ValueError(f"weight_floor must be <= -1, got {weight_floor}")
    return FreeLieAlgebra(alphabet, weight_floor, order).all_words()
