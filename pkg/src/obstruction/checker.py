"""
Obstruction checking for section candidates.

Target presentations are generated in weight -1, so a candidate's generator
map extends to a graded Lie map exactly when every target relation maps
into the source ideal. The image of each target relation, projected into
the source quotient, is the residue reported for that relation.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.errors import UsageError
from ..presentation.serialization import format_rational, format_vector
from .candidate import SectionCandidate
from .sequence import SequenceSpec
from .theta import THETA_WEIGHT, ThetaDecomposition

logger = logging.getLogger(__name__)

SPLITS = "splits_at_this_level"
OBSTRUCTED = "obstructed"


@dataclass
class RelationResidue:
    """Residue of one target relation."""

    label: str
    weight: int
    coordinates: Tuple[Fraction, ...]
    theta: Dict[str, Fraction] = field(default_factory=dict)
    complement_nonzero: bool = False

    @property
    def nonzero(self) -> bool:
        return any(self.coordinates)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "relation": self.label,
            "weight": self.weight,
            "coordinates": format_vector(self.coordinates),
            "theta": {k: format_rational(v) for k, v in self.theta.items()},
            "complement_nonzero": self.complement_nonzero,
        }


@dataclass
class ObstructionReport:
    """Residues, verdict and witness for one candidate."""

    sequence: Dict[str, Any]
    candidate: SectionCandidate
    residues: List[RelationResidue]
    index: int = 0

    @property
    def obstructed(self) -> bool:
        return any(r.nonzero for r in self.residues)

    @property
    def verdict(self) -> str:
        return OBSTRUCTED if self.obstructed else SPLITS

    @property
    def witness(self) -> Optional[Dict[str, Any]]:
        """First nonzero residue coordinate in relation order, preferring a Theta coordinate."""
        for r in self.residues:
            if not r.nonzero:
                continue
            for key, value in r.theta.items():
                if value:
                    return {"relation": r.label, "theta": key, "value": format_rational(value)}
            position = next(i for i, c in enumerate(r.coordinates) if c)
            return {"relation": r.label, "coordinate": position, "value": format_rational(r.coordinates[position])}
        return None

    def residue(self, label: str) -> RelationResidue:
        for r in self.residues:
            if r.label == label:
                return r
        raise KeyError(f"no residue for relation {label!r}")

    def theta_coordinate(self, key: str, relation: Optional[str] = None) -> Fraction:
        """
        The ``Theta_key`` coordinate on ``relation``, or on the first relation
        where it is nonzero when no relation is named.
        """
        if relation is not None:
            return self.residue(relation).theta.get(key, Fraction(0))
        for r in self.residues:
            value = r.theta.get(key)
            if value:
                return value
        return Fraction(0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "candidate": {"label": self.candidate.label, "coefficients": self.candidate.display_coefficients()},
            "residues": [r.to_dict() for r in self.residues],
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _decomposition(seq: SequenceSpec) -> Optional[ThetaDecomposition]:
    if THETA_WEIGHT < seq.weight_floor:
        return None
    return seq.theta_decomposition


def check_section(
    seq: SequenceSpec,
    cand: SectionCandidate,
    weight_floor: Optional[int] = None,
    index: int = 0,
) -> ObstructionReport:
    """
    Residues of every target relation of weight at least ``weight_floor``.

    Args:
        seq: The sequence.
        cand: A candidate with concrete coefficients.
        weight_floor: Deepest relation weight to check; defaults to the
            sequence floor and may not be deeper than it.
        index: Position of the candidate in a batch.

    Raises:
        UsageError: If the floor is deeper than the sequence floor or the
            candidate does not fit the sequence.
    """
    floor = seq.weight_floor if weight_floor is None else weight_floor
    if floor < seq.weight_floor:
        raise UsageError(f"weight floor {floor} is deeper than the sequence floor {seq.weight_floor}")
    section = cand.induced_map(seq)
    quotient = seq.source_quotient
    decomposition = _decomposition(seq)
    residues: List[RelationResidue] = []
    for rel in seq.target.relations:
        w = rel.weight
        if w is None or w < floor:
            continue
        coords = quotient.project(section(rel.element), w)
        residue = RelationResidue(rel.label, w, coords)
        if w == THETA_WEIGHT and decomposition is not None:
            theta, rest = decomposition.decompose(coords)
            residue.theta = theta
            residue.complement_nonzero = any(rest)
        residues.append(residue)
    report = ObstructionReport(seq.descriptor(), cand, residues, index)
    logger.info(f"{seq.kind.value}(g={seq.genus}, n={seq.n}) {cand.label}: {report.verdict}")
    return report


def check_all(
    seq: SequenceSpec,
    candidates: Sequence[SectionCandidate],
    workers: int = 1,
    weight_floor: Optional[int] = None,
) -> List[ObstructionReport]:
    """
    Check a list of candidates, in parallel when ``workers > 1``.

    Reports come back ordered by candidate index whatever the schedule.
    """
    if not seq.has_candidates:
        return []
    # shared state is built once before fanning out
    _decomposition(seq)
    if workers <= 1 or len(candidates) <= 1:
        return [check_section(seq, c, weight_floor, i) for i, c in enumerate(candidates)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(check_section, seq, c, weight_floor, i) for i, c in enumerate(candidates)]
        reports = [f.result() for f in futures]
    return sorted(reports, key=lambda r: r.index)
