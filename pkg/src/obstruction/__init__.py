"""
Section obstructions for the graded Birman-type sequences.
"""

from .candidate import (
    SectionCandidate,
    all_zeta_candidates,
    candidate_from_coefficients,
    composes_to_identity,
    is_equivariant,
    parse_zeta,
    symbolic_candidate,
    zeta_candidate,
)
from .certificate import (
    CertificateCheck,
    certificate_to_dict,
    certificate_to_json,
    load_certificate,
    verify_certificate,
)
from .checker import OBSTRUCTED, SPLITS, ObstructionReport, RelationResidue, check_all, check_section
from .sequence import SequenceKind, SequenceSpec, builtin_sequence, verify_projection
from .symbolic import SymbolicResult, solve_sections_symbolic
from .theta import ThetaDecomposition

__all__ = [
    "OBSTRUCTED",
    "SPLITS",
    "CertificateCheck",
    "ObstructionReport",
    "RelationResidue",
    "SectionCandidate",
    "SequenceKind",
    "SequenceSpec",
    "SymbolicResult",
    "ThetaDecomposition",
    "all_zeta_candidates",
    "builtin_sequence",
    "candidate_from_coefficients",
    "certificate_to_dict",
    "certificate_to_json",
    "check_all",
    "check_section",
    "composes_to_identity",
    "is_equivariant",
    "load_certificate",
    "parse_zeta",
    "solve_sections_symbolic",
    "symbolic_candidate",
    "verify_certificate",
    "zeta_candidate",
]
