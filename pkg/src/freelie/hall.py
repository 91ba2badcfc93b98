"""
Hall words and dimension counting.

A Hall word is a leaf (a generator) or a node ``(left, right)`` of Hall
words with ``left < right`` where, when ``left = (l1, l2)``, also
``l2 >= right``. The order compares total weight first with deeper
words smaller, then the leaf sequence by generator rank, then the two
factors recursively. A node is always smaller than its right factor, which
is what makes these words a Hall set.
"""

import logging
from enum import Enum
from typing import Optional, Tuple

from sympy import divisors, mobius as _sympy_mobius

from .alphabet import Generator

logger = logging.getLogger(__name__)


class HallOrder(Enum):
    """Generator ranking used inside the Hall order."""

    STANDARD = "standard"
    REVERSED = "reversed"

    @classmethod
    def from_string(cls, value: str) -> "HallOrder":
        """
        Parse a Hall order name.

        Raises:
            ValueError: If the name is unknown.
        """
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown Hall order {value!r}") from None

    def rank(self, ordinal: int, size: int) -> int:
        return ordinal if self is HallOrder.STANDARD else size - 1 - ordinal


class HallWord:
    """
    A leaf or node of the Hall set of one free Lie algebra.

    Words are interned by their algebra, so identity comparison is equality.
    Do not construct these directly; use :class:`FreeLieAlgebra`.
    """

    __slots__ = ("generator", "left", "right", "weight", "foliage", "key", "index", "position")

    def __init__(
        self,
        generator: Optional[Generator],
        left: Optional["HallWord"],
        right: Optional["HallWord"],
        rank: int = 0,
        index: int = 0,
    ):
        self.generator = generator
        self.left = left
        self.right = right
        self.index = index
        self.position = -1
        if generator is not None:
            self.weight = generator.weight
            self.foliage: Tuple[int, ...] = (rank,)
            self.key: tuple = (self.weight, self.foliage, 0)
        else:
            self.weight = left.weight + right.weight
            self.foliage = left.foliage + right.foliage
            self.key = (self.weight, self.foliage, 1, left.key, right.key)

    @property
    def is_leaf(self) -> bool:
        return self.generator is not None

    @property
    def degree(self) -> int:
        """Bracket length."""
        return len(self.foliage)

    def __lt__(self, other: "HallWord") -> bool:
        return self.key < other.key

    def __le__(self, other: "HallWord") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "HallWord") -> bool:
        return self.key > other.key

    def __ge__(self, other: "HallWord") -> bool:
        return self.key >= other.key

    def __str__(self) -> str:
        if self.generator is not None:
            return str(self.generator)
        return f"[{self.left},{self.right}]"

    def __repr__(self) -> str:
        return f"HallWord({self})"

    def leaves(self) -> Tuple[Generator, ...]:
        if self.generator is not None:
            return (self.generator,)
        return self.left.leaves() + self.right.leaves()


def hall_condition(left: HallWord, right: HallWord) -> bool:
    """True when the node ``(left, right)`` of two Hall words is itself Hall."""
    if not left < right:
        return False
    return left.is_leaf or left.right >= right


def is_hall(word: HallWord) -> bool:
    """Check the Hall condition at every node of ``word``."""
    if word.is_leaf:
        return True
    return is_hall(word.left) and is_hall(word.right) and hall_condition(word.left, word.right)


def mobius(n: int) -> int:
    """The Möbius function as a plain int."""
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    return int(_sympy_mobius(n))


def witt_dimension(m: int, k: int) -> int:
    """
    Dimension of the degree-``k`` part of the free Lie algebra on ``m`` letters.

    Args:
        m: Number of generators, at least 1.
        k: Degree, at least 1.

    Returns:
        ``(1/k) * sum over d | k of mobius(d) * m**(k/d)``.
    """
    if m < 1 or k < 1:
        raise ValueError(f"witt_dimension needs m >= 1 and k >= 1, got m={m}, k={k}")
    total = sum(mobius(d) * m ** (k // d) for d in divisors(k))
    return total // k
