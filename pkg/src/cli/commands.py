"""
Command-line surface.

Subcommands: dims, verify, sections, solve, schur, components and
certificate. Reports go to standard output (or ``--output``) as text or
deterministic JSON; diagnostics go to the log on standard error.

Exit statuses: 0 completed, 2 usage error, 3 integrity failure, 1 store
failure or any other error. A ``sections`` run that finds obstructions
still exits 0; verdicts live in the report.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from .. import __version__
from ..app import Application
from ..core.errors import IntegrityError, PersistenceError, UsageError
from ..core.settings import EngineSettings
from ..presentation.serialization import dumps

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_INTEGRITY = 3

COMMANDS = ("dims", "verify", "sections", "solve", "schur", "components", "certificate")
_NEEDS_N = ("sections", "solve")


@dataclass
class RunConfig:
    """One validated command invocation."""

    command: str
    genus: Optional[int] = None
    n: int = 0
    kind: Optional[str] = None
    filled: List[int] = field(default_factory=list)
    zeta: Optional[str] = None
    coefficients: Optional[List[str]] = None
    all_zeta: bool = False
    weight_floor: Optional[int] = None
    json_output: bool = False
    output: Optional[Path] = None
    copies: int = 3
    path: Optional[Path] = None
    recompute: bool = False
    store: Optional[Path] = None
    workers: Optional[int] = None
    config: Optional[Path] = None
    metrics_dir: Optional[Path] = None

    def validate(self) -> None:
        """
        Reject bad parameter combinations before any computation.

        Raises:
            UsageError: On the first problem found.
        """
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command != "certificate":
            if self.genus is None:
                raise UsageError(f"{self.command} needs --g")
            if self.genus < 1:
                raise UsageError(f"--g must be >= 1, got {self.genus}")
        if self.n < 0:
            raise UsageError(f"--n must be >= 0, got {self.n}")
        if self.command in ("dims", "verify", "sections", "solve") and not self.kind:
            raise UsageError(f"{self.command} needs --{'seq' if self.command in _NEEDS_N else 'kind'}")
        if any(j < 1 or j > self.n for j in self.filled):
            raise UsageError(f"--filled copies must lie in 1..{self.n}, got {self.filled}")
        if self.command == "sections" and self.n > 0:
            given = sum(1 for x in (self.zeta, self.coefficients, self.all_zeta or None) if x)
            if given != 1:
                raise UsageError("sections needs exactly one of --zeta, --coeffs or --all")
            if self.coefficients is not None and len(self.coefficients) != self.n:
                raise UsageError(f"--coeffs needs {self.n} values, got {len(self.coefficients)}")
        if self.command == "schur" and self.copies < 2:
            raise UsageError(f"--copies must be >= 2, got {self.copies}")
        if self.command == "certificate" and self.path is None:
            raise UsageError("certificate needs a FILE")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            genus=getattr(args, "g", None),
            n=getattr(args, "n", 0) or 0,
            kind=getattr(args, "kind", None) or getattr(args, "seq", None),
            filled=_int_list(getattr(args, "filled", None)),
            zeta=getattr(args, "zeta", None),
            coefficients=_text_list(getattr(args, "coeffs", None)),
            all_zeta=getattr(args, "all", False),
            weight_floor=args.weight_floor,
            json_output=args.json,
            output=args.output,
            copies=getattr(args, "copies", 3),
            path=getattr(args, "file", None),
            recompute=getattr(args, "recompute", False),
            store=getattr(args, "store", None),
            workers=args.workers,
            config=args.config,
            metrics_dir=args.metrics_dir,
        )


def _text_list(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    return [part.strip() for part in value.split(",") if part.strip()]


def _int_list(value: Optional[str]) -> List[int]:
    items = _text_list(value) or []
    try:
        return sorted(int(x) for x in items)
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit JSON instead of text")
    common.add_argument("--output", type=Path, help="Write the report to this file")
    common.add_argument("--weight-floor", type=int, help="Deepest weight computed (<= -1)")
    common.add_argument("--workers", type=int, help="Parallel candidate checks")
    common.add_argument("--config", type=Path, help="JSON settings file")
    common.add_argument("--metrics-dir", type=Path, help="Append computation events here as JSON lines")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(
        prog="hypsec",
        description="Graded Lie algebras of surfaces and configuration spaces, and section obstructions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command")

    def presentation_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--kind", required=True, help="labute, punctured, hain or partial")
        p.add_argument("--g", type=int, required=True, help="Genus")
        p.add_argument("--n", type=int, default=0, help="Copies or punctures")
        p.add_argument("--filled", help="Comma-separated copies j whose Theta_0j is killed (partial only)")

    dims_p = subparsers.add_parser("dims", parents=[common], help="Graded dimensions of a presentation")
    presentation_args(dims_p)

    verify_p = subparsers.add_parser("verify", parents=[common], help="Relation, Theta and Jacobi self-checks")
    presentation_args(verify_p)

    sections_p = subparsers.add_parser("sections", parents=[common], help="Check section candidates")
    sections_p.add_argument("--seq", required=True, help="beta_o, beta_prime or beta_hat")
    sections_p.add_argument("--g", type=int, required=True)
    sections_p.add_argument("--n", type=int, required=True)
    sections_p.add_argument("--zeta", help="One zeta candidate, e.g. 1+ or 2-")
    sections_p.add_argument("--coeffs", help="Explicit rationals a_1..a_n, e.g. --coeffs=1,0,-1/2")
    sections_p.add_argument("--all", action="store_true", help="Every zeta candidate")
    sections_p.add_argument("--store", type=Path, help="Record certificates in this SQLite database")

    solve_p = subparsers.add_parser("solve", parents=[common], help="Symbolic section constraints")
    solve_p.add_argument("--seq", required=True)
    solve_p.add_argument("--g", type=int, required=True)
    solve_p.add_argument("--n", type=int, required=True)

    schur_p = subparsers.add_parser("schur", parents=[common], help="Intertwiner dimensions")
    schur_p.add_argument("--g", type=int, required=True)
    schur_p.add_argument("--copies", type=int, default=3)

    components_p = subparsers.add_parser("components", parents=[common], help="Hyperelliptic component count")
    components_p.add_argument("--g", type=int, required=True)

    certificate_p = subparsers.add_parser("certificate", parents=[common], help="Re-verify a certificate file")
    certificate_p.add_argument("file", type=Path)
    certificate_p.add_argument("--recompute", action="store_true", help="Rebuild the sequence and recheck")
    return parser


# Text renderers


def _render_dims(result: Dict[str, int]) -> str:
    return "\n".join(f"Gr_{w}: {d}" for w, d in result.items())


def _render_verify(result: Dict[str, Any]) -> str:
    lines = [_render_dims(result["dims"])]
    lines += [f"{name}: {'ok' if passed else 'FAILED'}" for name, passed in result["checks"].items()]
    return "\n".join(lines)


def _render_sections(result: Dict[str, Any]) -> str:
    seq = result["sequence"]
    lines = [f"{seq['kind']}(g={seq['genus']}, n={seq['n']}), weight floor {seq['weight_floor']}"]
    if result["status"] == "no_candidates":
        lines.append("no section candidates")
    for report in result["reports"]:
        cand = report["candidate"]
        coefficients = f"a=({', '.join(cand['coefficients'])})"
        name = coefficients if cand["label"].startswith("a=") else f"{cand['label']} {coefficients}"
        line = f"{name}: {report['verdict']}"
        witness = report["witness"]
        if witness is not None:
            where = f"Theta_{witness['theta']}" if "theta" in witness else f"coordinate {witness['coordinate']}"
            line += f" [{witness['relation']}: {where} = {witness['value']}]"
        lines.append(line)
    return "\n".join(lines)


def _render_solve(result: Dict[str, Any]) -> str:
    lines = [f"unknowns: {', '.join(result['unknowns']) or '-'}", f"solver: {result['solver']}", f"status: {result['status']}"]
    lines += [f"constraint: {c} = 0" for c in result["constraints"]]
    if result["discriminant"] is not None:
        lines.append(f"discriminant: {result['discriminant']}")
    if result["rational_solutions"] is not None:
        lines.append(f"rational solutions: {result['rational_solutions'] or 'none'}")
    lines += [f"{c['label']}: {'satisfies' if c['satisfies'] else 'fails'}" for c in result["candidate_checks"]]
    return "\n".join(lines)


def _render_schur(result: Dict[str, Any]) -> str:
    return "\n".join(f"Hom({p['source']}, {p['target']}) = {p['dimension']}" for p in result["pairs"])


def _render_components(result: Dict[str, Any]) -> str:
    return str(result["count"])


def _render_certificate(result: Dict[str, Any]) -> str:
    lines = [f"{'ok' if result['ok'] else 'MISMATCH'}: {result['checked']} reports checked"]
    lines += result["mismatches"]
    return "\n".join(lines)


_RENDERERS: Dict[str, Callable[[Any], str]] = {
    "dims": _render_dims,
    "verify": _render_verify,
    "sections": _render_sections,
    "solve": _render_solve,
    "schur": _render_schur,
    "components": _render_components,
    "certificate": _render_certificate,
}


def _dispatch(app: Application, config: RunConfig) -> Any:
    cmd = config.command
    if cmd == "dims":
        return app.dims(config.kind, config.genus, config.n, config.filled, config.weight_floor)
    if cmd == "verify":
        return app.verify(config.kind, config.genus, config.n, config.filled, config.weight_floor)
    if cmd == "sections":
        return app.sections(
            config.kind, config.genus, config.n, config.zeta, config.coefficients, config.all_zeta, config.weight_floor
        )
    if cmd == "solve":
        return app.solve(config.kind, config.genus, config.n, config.weight_floor)
    if cmd == "schur":
        return app.schur(config.genus, config.copies)
    if cmd == "components":
        return app.components(config.genus)
    return app.certificate(config.path, config.recompute)


def _failed(command: str, result: Any) -> bool:
    return command in ("verify", "certificate") and not result["ok"]


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text + "\n")
        return
    try:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {output}: {e}") from e
    logger.info(f"Wrote report to {output}")


def _configure(config: RunConfig) -> EngineSettings:
    settings = EngineSettings()
    if config.config is not None:
        settings.load_file(config.config)
    settings.update_settings(
        {
            "workers": config.workers,
            "metrics_dir": str(config.metrics_dir) if config.metrics_dir else None,
            "store_path": str(config.store) if config.store else None,
        }
    )
    return settings


def run(config: RunConfig) -> int:
    """
    Execute one validated command and write its report.

    Returns:
        The process exit status.
    """
    app: Optional[Application] = None
    try:
        config.validate()
        app = Application(_configure(config))
        result = _dispatch(app, config)
        text = dumps(result) if config.json_output else _RENDERERS[config.command](result)
        _emit(text, config.output)
        if _failed(config.command, result):
            logger.error(f"{config.command} reported failed checks")
            return EXIT_INTEGRITY
        return EXIT_OK
    except UsageError as e:
        logger.error(f"Usage error: {e}")
        sys.stderr.write(f"hypsec: error: {e}\n")
        if app is not None:
            app.metrics.log_error(str(e), "usage")
        return EXIT_USAGE
    except IntegrityError as e:
        logger.error(f"Integrity failure: {e}")
        sys.stderr.write(f"hypsec: integrity failure: {e}\n")
        if app is not None:
            app.metrics.log_error(str(e), "integrity")
        return EXIT_INTEGRITY
    except PersistenceError as e:
        logger.error(f"Store failure: {e}")
        sys.stderr.write(f"hypsec: store error: {e}\n")
        if app is not None:
            app.metrics.log_error(str(e), "persistence")
        return EXIT_ERROR
    except Exception as e:
        logger.error(f"Error running {config.command}: {e}", exc_info=True)
        if app is not None:
            app.metrics.log_error(str(e), type(e).__name__)
        return EXIT_ERROR
    finally:
        if app is not None:
            app.shutdown()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run the command.

    Returns:
        The process exit status; argparse errors give 2.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        config = RunConfig.from_args(args)
    except UsageError as e:
        sys.stderr.write(f"hypsec: error: {e}\n")
        return EXIT_USAGE
    return run(config)


def verbosity_level(argv: Optional[Sequence[str]]) -> int:
    """Logging level implied by the ``-v`` flags in ``argv``."""
    count = 0
    for arg in argv or []:
        if arg == "--verbose":
            count += 1
        elif arg.startswith("-") and not arg.startswith("--") and set(arg[1:]) == {"v"}:
            count += len(arg) - 1
    if count >= 2:
        return logging.DEBUG
    return logging.INFO if count == 1 else logging.WARNING
