"""
Section candidates ``u^j -> u^j + a_j u^0``.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..core.errors import UsageError
from ..exactla.matrix import to_fraction
from ..freelie.algebra import LieElement, LieHomomorphism
from ..presentation.serialization import format_rational
from ..symplectic.space import CopyAction, SpGeneratorSet, sp_generators
from .sequence import SequenceSpec

logger = logging.getLogger(__name__)

Coefficient = Union[Fraction, str]

_ZETA = re.compile(r"^\s*(\d+)\s*([+-])\s*$")


@dataclass(frozen=True)
class SectionCandidate:
    """
    Coefficients ``a_1..a_n`` of the map ``u^j -> u^j + a_j u^0``.

    A coefficient is either a Fraction or the name of an unknown.
    """

    coefficients: Tuple[Coefficient, ...]
    label: str = ""

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def is_concrete(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coefficients)

    def display_coefficients(self) -> List[str]:
        return [format_rational(c) if isinstance(c, Fraction) else c for c in self.coefficients]

    def induced_map(self, seq: SequenceSpec) -> LieHomomorphism:
        """
        The Lie map from the target to the source determined on generators.

        Raises:
            UsageError: If the candidate has unknowns or the wrong length.
        """
        if not self.is_concrete:
            raise UsageError(f"candidate {self.label} has symbolic coefficients")
        if seq.target is None:
            raise UsageError(f"{seq.kind.value} with n = 0 has no section candidates")
        if self.n != seq.n:
            raise UsageError(f"candidate has {self.n} coefficients, sequence needs {seq.n}")
        source = seq.source.algebra
        images = {}
        for gen in seq.target.alphabet:
            a = self.coefficients[gen.copy - 1]
            image = source.gen(gen.label, gen.copy)
            if a:
                image = image + a * source.gen(gen.label, 0)
            images[gen] = image
        return seq.target.algebra.homomorphism(images, source)


def zeta_candidate(j: int, sign: str, n: int) -> SectionCandidate:
    """
    ``zeta_j^sign``: ``a = sign * e_j``.

    Raises:
        UsageError: If ``j`` is outside ``1..n`` or the sign is not ``+``/``-``.
    """
    if sign in (1, "1"):
        sign = "+"
    elif sign in (-1, "-1"):
        sign = "-"
    if sign not in ("+", "-"):
        raise UsageError(f"sign must be '+' or '-', got {sign!r}")
    if not 1 <= j <= n:
        raise UsageError(f"zeta index {j} outside 1..{n}")
    value = Fraction(1 if sign == "+" else -1)
    coefficients = tuple(value if k == j else Fraction(0) for k in range(1, n + 1))
    return SectionCandidate(coefficients, f"zeta_{j}{sign}")


def parse_zeta(text: str, n: int) -> SectionCandidate:
    """Parse ``"1+"`` or ``"2-"``."""
    match = _ZETA.match(text)
    if not match:
        raise UsageError(f"cannot parse zeta candidate {text!r}; expected e.g. '1+'")
    return zeta_candidate(int(match.group(1)), match.group(2), n)


def candidate_from_coefficients(values: Sequence[Union[str, int, Fraction]], label: Optional[str] = None) -> SectionCandidate:
    """
    Candidate with explicit rational coefficients.

    Raises:
        UsageError: If a value is not an exact rational.
    """
    try:
        coefficients = tuple(to_fraction(v.strip() if isinstance(v, str) else v) for v in values)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise UsageError(f"invalid coefficient list {list(values)!r}: {e}") from e
    text = ",".join(format_rational(c) for c in coefficients)
    return SectionCandidate(coefficients, label or f"a=({text})")


def all_zeta_candidates(n: int) -> List[SectionCandidate]:
    """``zeta_1^+, zeta_1^-, ..., zeta_n^+, zeta_n^-``."""
    return [zeta_candidate(j, s, n) for j in range(1, n + 1) for s in ("+", "-")]


def symbolic_candidate(n: int) -> SectionCandidate:
    return SectionCandidate(tuple(f"a{j}" for j in range(1, n + 1)), "symbolic")


def composes_to_identity(seq: SequenceSpec, cand: SectionCandidate) -> bool:
    """True when projection after the candidate is the identity on target generators."""
    section = cand.induced_map(seq)
    for gen in seq.target.alphabet:
        x = seq.target.algebra.element(gen)
        if seq.projection(section(x)) != x:
            return False
    return True


def is_equivariant(seq: SequenceSpec, cand: SectionCandidate, generators: Optional[SpGeneratorSet] = None) -> bool:
    """
    True when the candidate commutes with every symplectic generator on the
    target generators.
    """
    section = cand.induced_map(seq)
    gens = generators or sp_generators(seq.genus)
    source_action = CopyAction(seq.source.space, seq.source.algebra)
    target_action = CopyAction(seq.target.space, seq.target.algebra)
    for m in gens:
        for gen in seq.target.alphabet:
            x: LieElement = seq.target.algebra.element(gen)
            if section(target_action.act(m, x)) != source_action.act(m, section(x)):
                logger.warning(f"candidate {cand.label} is not equivariant on {gen}")
                return False
    return True
