"""
Exception hierarchy shared by the engine and the command line.
"""


class EngineError(Exception):
    """Base class for every error raised deliberately by the engine."""


class UsageError(EngineError, ValueError):
    """Invalid parameters or parameter combinations supplied by the caller."""


class InconsistentSystemError(EngineError, ValueError):
    """
    A linear system has no solution.

    Attributes:
        row: Index of the reduced row that reads 0 = c with c nonzero.
    """

    def __init__(self, message: str, row: int = -1):
        super().__init__(message)
        self.row = row


class IntegrityError(EngineError):
    """An internal invariant failed; results computed so far cannot be trusted."""


class PersistenceError(EngineError):
    """The certificate store could not be opened, read or written."""
