"""
Obstruction certificates.

A certificate records a sequence descriptor and one report per candidate:
coefficients, residue coordinates as exact rational strings, Theta
coordinates and the verdict. Verification re-derives each verdict from the
recorded residues and can optionally recompute everything from scratch.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

from ..core.errors import UsageError
from ..freelie.hall import HallOrder
from ..presentation.serialization import dumps, parse_rational
from .candidate import candidate_from_coefficients
from .checker import OBSTRUCTED, SPLITS, ObstructionReport, check_section
from .sequence import SequenceSpec, builtin_sequence

logger = logging.getLogger(__name__)

SCHEMA = "hypsec.certificate/1"


def certificate_to_dict(seq: SequenceSpec, reports: Sequence[ObstructionReport]) -> Dict[str, Any]:
    return {
        "schema": SCHEMA,
        "sequence": seq.descriptor(),
        "status": "checked" if seq.has_candidates else "no_candidates",
        "reports": [r.to_dict() for r in reports],
    }


def certificate_to_json(seq: SequenceSpec, reports: Sequence[ObstructionReport]) -> str:
    return dumps(certificate_to_dict(seq, reports))


def load_certificate(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Read a certificate file.

    Raises:
        UsageError: If the file is missing, not JSON, or not a certificate.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read certificate {path}: {e}") from e
    if not isinstance(payload, dict) or payload.get("schema") != SCHEMA:
        raise UsageError(f"{path} is not a {SCHEMA} certificate")
    return payload


@dataclass
class CertificateCheck:
    """Outcome of verifying a certificate."""

    ok: bool = True
    checked: int = 0
    mismatches: List[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.mismatches.append(message)
        logger.warning(f"certificate mismatch: {message}")

    def to_dict(self) -> Dict[str, Any]:
        return {"ok": self.ok, "checked": self.checked, "mismatches": list(self.mismatches)}


def _recorded_verdict(report: Dict[str, Any]) -> str:
    for residue in report.get("residues", []):
        if any(parse_rational(c) for c in residue.get("coordinates", [])):
            return OBSTRUCTED
    return SPLITS


def verify_certificate(payload: Dict[str, Any], recompute: bool = False) -> CertificateCheck:
    """
    Check every recorded verdict against its residues.

    Args:
        payload: A parsed certificate.
        recompute: Also rebuild the sequence and recheck every candidate,
            comparing residues exactly.

    Raises:
        UsageError: If the payload is malformed.
    """
    result = CertificateCheck()
    if payload.get("schema") != SCHEMA:
        raise UsageError(f"unsupported certificate schema {payload.get('schema')!r}")
    try:
        reports = payload["reports"]
        descriptor = payload["sequence"]
        for report in reports:
            label = report["candidate"]["label"]
            derived = _recorded_verdict(report)
            if derived != report["verdict"]:
                result.fail(f"{label}: recorded verdict {report['verdict']} but residues give {derived}")
            result.checked += 1
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"malformed certificate: {e}") from e

    if recompute:
        seq = builtin_sequence(
            descriptor["kind"],
            descriptor["genus"],
            descriptor["n"],
            descriptor["weight_floor"],
            HallOrder.from_string(descriptor.get("hall_order", "standard")),
        )
        for report in reports:
            cand = candidate_from_coefficients(report["candidate"]["coefficients"], report["candidate"]["label"])
            fresh = check_section(seq, cand, index=report.get("index", 0)).to_dict()
            if fresh["residues"] != report["residues"]:
                result.fail(f"{cand.label}: recomputed residues differ")
            if fresh["verdict"] != report["verdict"]:
                result.fail(f"{cand.label}: recomputed verdict {fresh['verdict']} differs")
    logger.info(f"Verified certificate: {result.checked} reports, ok={result.ok}")
    return result
