"""
Free Lie algebras over weighted alphabets, in a Hall basis.
"""

from .alphabet import Alphabet, Generator
from .algebra import DEFAULT_WEIGHT_FLOOR, FreeLieAlgebra, LieElement, LieHomomorphism, hall_words
from .hall import HallOrder, HallWord, is_hall, mobius, witt_dimension

__all__ = [
    "Alphabet",
    "DEFAULT_WEIGHT_FLOOR",
    "FreeLieAlgebra",
    "Generator",
    "HallOrder",
    "HallWord",
    "LieElement",
    "LieHomomorphism",
    "hall_words",
    "is_hall",
    "mobius",
    "witt_dimension",
]
