"""
Command-line interface.
"""

from .commands import EXIT_ERROR, EXIT_INTEGRITY, EXIT_OK, EXIT_USAGE, RunConfig, build_parser, main, run, verbosity_level

__all__ = [
    "EXIT_ERROR",
    "EXIT_INTEGRITY",
    "EXIT_OK",
    "EXIT_USAGE",
    "RunConfig",
    "build_parser",
    "main",
    "run",
    "verbosity_level",
]
