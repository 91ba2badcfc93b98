"""
Graded Birman-type sequences.

A sequence is a surjection from a source presentation on copies ``0..n``
to the target ``hain_config`` on copies ``1..n`` that kills copy 0.
Three sources are built in:

- ``beta_o``: the full configuration presentation on copies ``0..n``;
- ``beta_prime``: ``Theta_0j`` killed for ``j`` in ``2..n``;
- ``beta_hat``: ``Theta_0j`` killed for every ``j`` in ``1..n``.
"""

import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from ..core.errors import IntegrityError, UsageError
from ..freelie.algebra import LieHomomorphism
from ..freelie.hall import HallOrder
from ..presentation.builtin import hain_config, partial_config
from ..presentation.graded import GradedPresentation, GradedQuotient, build_quotient
from .theta import ThetaDecomposition

logger = logging.getLogger(__name__)

DEFAULT_SEQUENCE_FLOOR = -2


class SequenceKind(Enum):
    """Built-in sequences."""

    BETA_O = "beta_o"
    BETA_PRIME = "beta_prime"
    BETA_HAT = "beta_hat"

    @classmethod
    def from_string(cls, value: str) -> "SequenceKind":
        """
        Parse ``beta_o``, ``beta-o`` and so on.

        Raises:
            UsageError: If the name is unknown.
        """
        name = value.strip().lower().replace("-", "_")
        try:
            return cls(name)
        except ValueError:
            raise UsageError(f"unknown sequence kind {value!r}") from None

    def filled(self, n: int) -> List[int]:
        """Copies ``j`` whose ``Theta_0j`` the source kills."""
        if self is SequenceKind.BETA_PRIME:
            return list(range(2, n + 1))
        if self is SequenceKind.BETA_HAT:
            return list(range(1, n + 1))
        return []


@dataclass
class SequenceSpec:
    """
    Source and target presentations with the projection killing copy 0.

    ``target`` and ``projection`` are None for the degenerate ``n = 0`` case.
    """

    kind: SequenceKind
    genus: int
    n: int
    source: GradedPresentation
    target: Optional[GradedPresentation]
    projection: Optional[LieHomomorphism]
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)
    _quotients: Dict[str, GradedQuotient] = field(default_factory=dict, repr=False, compare=False)
    _theta: Optional[ThetaDecomposition] = field(default=None, repr=False, compare=False)

    @property
    def weight_floor(self) -> int:
        return self.source.weight_floor

    @property
    def hall_order(self) -> HallOrder:
        return self.source.algebra.order

    @property
    def has_candidates(self) -> bool:
        return self.target is not None

    def _quotient(self, which: str) -> GradedQuotient:
        cached = self._quotients.get(which)
        if cached is not None:
            return cached
        with self._lock:
            if which not in self._quotients:
                presentation = self.source if which == "source" else self.target
                if presentation is None:
                    raise UsageError(f"{self.kind.value} with n = 0 has no target")
                self._quotients[which] = build_quotient(presentation)
            return self._quotients[which]

    @property
    def source_quotient(self) -> GradedQuotient:
        return self._quotient("source")

    @property
    def target_quotient(self) -> GradedQuotient:
        return self._quotient("target")

    @property
    def theta_decomposition(self) -> ThetaDecomposition:
        """Theta coordinates on the weight -2 piece of the source quotient."""
        quotient = self.source_quotient
        with self._lock:
            if self._theta is None:
                self._theta = ThetaDecomposition(quotient)
            return self._theta

    def descriptor(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "genus": self.genus,
            "n": self.n,
            "weight_floor": self.weight_floor,
            "hall_order": self.hall_order.value,
        }

    def with_target(self, target: GradedPresentation) -> "SequenceSpec":
        """Same source with another target presentation; not validated."""
        return _assemble(self.kind, self.genus, self.n, self.source, target, validate=False)


def _projection(source: GradedPresentation, target: GradedPresentation) -> LieHomomorphism:
    images = {}
    for gen in source.alphabet:
        if gen.copy == 0:
            continue
        images[gen] = target.algebra.element(target.alphabet.lookup(gen.label, gen.copy))
    return source.algebra.homomorphism(images, target.algebra)


def _assemble(kind, genus, n, source, target, validate: bool) -> SequenceSpec:
    projection = _projection(source, target) if target is not None else None
    seq = SequenceSpec(kind, genus, n, source, target, projection)
    if validate and not verify_projection(seq):
        raise IntegrityError(f"{kind.value}(g={genus}, n={n}): projection does not respect the relations")
    return seq


def verify_projection(seq: SequenceSpec) -> bool:
    """True when every source relation maps into the target's relation ideal."""
    if seq.target is None:
        return True
    quotient = seq.target_quotient
    for rel in seq.source.relations:
        image = seq.projection(rel.element)
        if not quotient.kills(image):
            logger.warning(f"{seq.kind.value}: source relation {rel.label} survives in the target")
            return False
    return True


def builtin_sequence(
    kind,
    genus: int,
    n: int,
    weight_floor: int = DEFAULT_SEQUENCE_FLOOR,
    order: HallOrder = HallOrder.STANDARD,
    validate: bool = True,
) -> SequenceSpec:
    """
    Build ``beta_o``, ``beta_prime`` or ``beta_hat`` for genus ``g`` and ``n`` target copies.

    Raises:
        UsageError: On invalid parameters.
        IntegrityError: If validation finds a relation the projection does not respect.
    """
    if not isinstance(kind, SequenceKind):
        kind = SequenceKind.from_string(str(kind))
    if genus < 2:
        raise UsageError(f"sequences need genus >= 2, got {genus}")
    minimum = 0 if kind is SequenceKind.BETA_O else 1
    if n < minimum:
        raise UsageError(f"{kind.value} needs n >= {minimum}, got {n}")
    if n == 0:
        source = hain_config(genus, 1, weight_floor, order, first_copy=0)
        return _assemble(kind, genus, 0, source, None, validate)
    filled = kind.filled(n)
    if kind is SequenceKind.BETA_O:
        source = hain_config(genus, n + 1, weight_floor, order, first_copy=0)
    else:
        source = partial_config(genus, n, filled, weight_floor, order)
    target = hain_config(genus, n, weight_floor, order, first_copy=1)
    seq = _assemble(kind, genus, n, source, target, validate)
    logger.debug(f"Built sequence {kind.value}(g={genus}, n={n}) with filled {filled}")
    return seq
