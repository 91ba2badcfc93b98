"""
Weighted generator alphabets.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """
    One free generator.

    Attributes:
        label: Name within its copy, e.g. ``"a1"`` or ``"z2"``.
        copy: Copy index (the ``j`` of ``a1^(j)``).
        weight: Negative integer weight.
    """

    label: str
    copy: int = 0
    weight: int = -1

    def __str__(self) -> str:
        return f"{self.label}^{self.copy}"


class Alphabet:
    """
    Ordered, immutable list of generators.

    The order given at construction is the total order used by Hall words.

    Raises:
        ValueError: On duplicate (label, copy) pairs or non-negative weights.
    """

    def __init__(self, generators: Iterable[Generator]):
        gens = tuple(generators)
        index: Dict[Tuple[str, int], int] = {}
        for i, gen in enumerate(gens):
            if gen.weight > -1:
                raise ValueError(f"generator {gen} has weight {gen.weight}; weights must be <= -1")
            if gen.copy < 0:
                raise ValueError(f"generator {gen} has negative copy index")
            key = (gen.label, gen.copy)
            if key in index:
                raise ValueError(f"duplicate generator {gen}")
            index[key] = i
        self._generators = gens
        self._index = index

    def __len__(self) -> int:
        return len(self._generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self._generators)

    def __getitem__(self, i: int) -> Generator:
        return self._generators[i]

    def __contains__(self, gen: object) -> bool:
        if not isinstance(gen, Generator):
            return False
        i = self._index.get((gen.label, gen.copy))
        return i is not None and self._generators[i] == gen

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self._generators == other._generators

    def __hash__(self) -> int:
        return hash(self._generators)

    def __repr__(self) -> str:
        return f"Alphabet({', '.join(f'{g}:{g.weight}' for g in self._generators)})"

    @property
    def generators(self) -> Tuple[Generator, ...]:
        return self._generators

    def ordinal(self, gen: Generator) -> int:
        """Position of ``gen`` in the alphabet order."""
        try:
            return self._index[(gen.label, gen.copy)]
        except KeyError:
            raise KeyError(f"generator {gen} is not in the alphabet") from None

    def lookup(self, label: str, copy: int = 0) -> Generator:
        try:
            return self._generators[self._index[(label, copy)]]
        except KeyError:
            raise KeyError(f"no generator {label}^{copy}") from None

    def copies(self) -> List[int]:
        return sorted({g.copy for g in self._generators})

    def of_weight(self, weight: int) -> List[Generator]:
        return [g for g in self._generators if g.weight == weight]

