"""
Application module.

This module coordinates settings, metrics, the certificate store and a
per-process cache of built quotients and sequences. Every public method
returns a JSON-ready dict; errors propagate to the caller (the command
line maps them to exit statuses).
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .analytics_logging.analytics import ComputationMetrics, EventType
from .core.errors import UsageError
from .core.settings import EngineSettings
from .freelie.hall import HallOrder
from .obstruction.candidate import SectionCandidate, all_zeta_candidates, candidate_from_coefficients, parse_zeta
from .obstruction.certificate import certificate_to_dict, load_certificate, verify_certificate
from .obstruction.checker import check_all
from .obstruction.sequence import SequenceKind, SequenceSpec, builtin_sequence
from .obstruction.symbolic import SUPPORTED_FLOOR, solve_sections_symbolic
from .persistence.database import CertificateStore
from .presentation.builtin import PresentationKind, builtin_presentation
from .presentation.equivariance import check_relations_stable, quotient_action
from .presentation.graded import GradedQuotient, build_quotient
from .presentation.serialization import dims_to_dict
from .symplectic.counting import hyperelliptic_component_count
from .symplectic.schur import schur_table
from .symplectic.space import sp_generators, theta

logger = logging.getLogger(__name__)

JACOBI_SAMPLE = 2000


class Application:
    """
    Coordinates the engine components for one process.

    Args:
        settings: Engine settings; defaults to the shared instance.
        metrics: Metrics collector; defaults to one built from the settings.
        store: Certificate store; defaults to one at ``store_path`` when that
            setting is present, otherwise no store.
    """

    def __init__(
        self,
        settings: Optional[EngineSettings] = None,
        metrics: Optional[ComputationMetrics] = None,
        store: Optional[CertificateStore] = None,
    ):
        self.settings = settings or EngineSettings()
        self.metrics = metrics or ComputationMetrics(self.settings.get("metrics_dir"))
        store_path = self.settings.get("store_path")
        self.store = store if store is not None else (CertificateStore(store_path) if store_path else None)
        self._quotients: Dict[Tuple, GradedQuotient] = {}
        self._sequences: Dict[Tuple, SequenceSpec] = {}
        self.metrics.log_event(EventType.RUN_START, {"settings": _jsonable(self.settings.settings)})
        logger.debug("Application initialized")

    @property
    def hall_order(self) -> HallOrder:
        return HallOrder.from_string(self.settings.get("hall_order"))

    def _floor(self, requested: Optional[int]) -> int:
        return self.settings.effective_floor(requested)

    # Presentations

    def quotient(
        self, kind: Union[str, PresentationKind], genus: int, n: int = 0,
        filled: Iterable[int] = (), weight_floor: Optional[int] = None,
    ) -> GradedQuotient:
        """Build (or fetch from the cache) the quotient of a built-in presentation."""
        if not isinstance(kind, PresentationKind):
            kind = PresentationKind.from_string(kind)
        floor = self._floor(weight_floor)
        key = (kind, genus, n, tuple(sorted(filled)), floor, self.hall_order)
        cached = self._quotients.get(key)
        if cached is not None:
            return cached
        with self.metrics.timed("build_quotient", EventType.QUOTIENT_BUILT, {"kind": kind.value, "genus": genus, "n": n}):
            presentation = builtin_presentation(kind, genus, n, list(filled), floor, self.hall_order)
            quotient = build_quotient(presentation)
        self._quotients[key] = quotient
        return quotient

    def dims(self, kind, genus: int, n: int = 0, filled: Iterable[int] = (), weight_floor: Optional[int] = None) -> Dict[str, int]:
        """Graded dimensions keyed by weight as a string, e.g. ``{"-1": 12, "-2": 29}``."""
        return dims_to_dict(self.quotient(kind, genus, n, filled, weight_floor).graded_dims())

    def verify(self, kind, genus: int, n: int = 0, filled: Iterable[int] = (), weight_floor: Optional[int] = None) -> Dict[str, Any]:
        """
        Self-checks on a built-in presentation: ideal stability under the
        symplectic generators, invariance of every Theta_i, antisymmetry of
        the structure constants and the Jacobi identity on a sample.
        """
        q = self.quotient(kind, genus, n, filled, weight_floor)
        with self.metrics.timed("verify"):
            gens = sp_generators(genus)
            action = quotient_action(q)
            space = q.presentation.space
            theta_fixed = True
            for copy in q.algebra.alphabet.copies():
                t = theta(space, q.algebra, copy)
                if q.algebra.weight_floor <= -2 and any(action.act(m, t) != t for m in gens):
                    theta_fixed = False
            checks = {
                "relations_stable": check_relations_stable(q, gens),
                "theta_invariant": theta_fixed,
                "antisymmetry": q.check_antisymmetry(),
                "jacobi": q.check_jacobi(limit=JACOBI_SAMPLE),
            }
        return {
            "presentation": dict(q.presentation.descriptor, weight_floor=q.weight_floor),
            "dims": dims_to_dict(q.graded_dims()),
            "checks": checks,
            "ok": all(checks.values()),
        }

    # Sequences

    def sequence(self, kind, genus: int, n: int, weight_floor: Optional[int] = None) -> SequenceSpec:
        if not isinstance(kind, SequenceKind):
            kind = SequenceKind.from_string(kind)
        floor = self._floor(weight_floor)
        key = (kind, genus, n, floor, self.hall_order)
        cached = self._sequences.get(key)
        if cached is not None:
            return cached
        with self.metrics.timed("build_sequence", EventType.QUOTIENT_BUILT, {"sequence": kind.value, "genus": genus, "n": n}):
            seq = builtin_sequence(kind, genus, n, floor, self.hall_order)
        self._sequences[key] = seq
        return seq

    def candidates(
        self, n: int, zeta: Optional[str] = None, coefficients: Optional[Sequence[str]] = None, all_zeta: bool = False
    ) -> List[SectionCandidate]:
        """
        Resolve exactly one of ``zeta``, ``coefficients`` or ``all_zeta``.

        Raises:
            UsageError: If none or several are given.
        """
        chosen = [x for x in (zeta, coefficients, all_zeta or None) if x]
        if len(chosen) != 1:
            raise UsageError("give exactly one of --zeta, --coeffs or --all")
        if zeta:
            return [parse_zeta(zeta, n)]
        if coefficients:
            cand = candidate_from_coefficients(coefficients)
            if cand.n != n:
                raise UsageError(f"expected {n} coefficients, got {cand.n}")
            return [cand]
        return all_zeta_candidates(n)

    def sections(
        self,
        kind,
        genus: int,
        n: int,
        zeta: Optional[str] = None,
        coefficients: Optional[Sequence[str]] = None,
        all_zeta: bool = False,
        weight_floor: Optional[int] = None,
    ) -> Dict[str, Any]:
        """
        Check candidates against a built-in sequence and return the certificate.

        For ``beta_o`` with ``n = 0`` no candidate exists and the certificate
        carries status ``no_candidates``.
        """
        seq = self.sequence(kind, genus, n, weight_floor)
        cands = [] if not seq.has_candidates else self.candidates(n, zeta, coefficients, all_zeta)
        with self.metrics.timed("check_sections", EventType.SECTION_CHECKED, {"sequence": seq.kind.value, "count": len(cands)}):
            reports = check_all(seq, cands, workers=self.settings.workers)
        certificate = certificate_to_dict(seq, reports)
        if self.store is not None:
            run_id = self.store.record_run("sections", seq.descriptor())
            self.store.record_certificate_file(certificate, run_id)
        return certificate

    def solve(self, kind, genus: int, n: int, weight_floor: Optional[int] = None) -> Dict[str, Any]:
        """
        Symbolic constraints on the candidate coefficients.

        Only an explicitly requested floor is checked; the configured default
        floor does not apply here.

        Raises:
            UsageError: If ``weight_floor`` is given and is not -2.
        """
        floor = SUPPORTED_FLOOR if weight_floor is None else self._floor(weight_floor)
        seq = self.sequence(kind, genus, n, SUPPORTED_FLOOR)
        with self.metrics.timed("solve", EventType.SYMBOLIC_SOLVED, {"sequence": seq.kind.value, "n": n}):
            result = solve_sections_symbolic(seq, floor)
        return result.to_dict()

    # Representation theory and counting

    def schur(self, genus: int, max_copies: int = 3) -> Dict[str, Any]:
        with self.metrics.timed("schur", EventType.SCHUR_SOLVED, {"genus": genus}):
            table = schur_table(genus, max_copies)
        return {
            "genus": genus,
            "pairs": [{"source": a, "target": b, "dimension": d} for a, b, d in table],
        }

    def components(self, genus: int) -> Dict[str, Any]:
        return {"genus": genus, "count": hyperelliptic_component_count(genus)}

    def certificate(self, path: Union[str, Path], recompute: bool = False) -> Dict[str, Any]:
        payload = load_certificate(path)
        with self.metrics.timed("certificate", EventType.CERTIFICATE_VERIFIED, {"recompute": recompute}):
            result = verify_certificate(payload, recompute)
        return result.to_dict()

    def shutdown(self) -> None:
        self.metrics.log_event(EventType.RUN_EXIT, {"operations": self.metrics.get_operation_stats()})
        if self.store is not None:
            self.store.close()
        logger.debug("Application shut down")


def _jsonable(settings: Dict[str, Any]) -> Dict[str, Any]:
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in settings.items()}


def create_app(config_path: Optional[Union[str, Path]] = None, **overrides: Any) -> Application:
    """
    Create an application after loading an optional config file and overrides.
    """
    settings = EngineSettings()
    if config_path:
        settings.load_file(config_path)
    settings.update_settings(overrides)
    return Application(settings)
