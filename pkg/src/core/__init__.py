"""
Core configuration and error types.
"""

from .errors import EngineError, InconsistentSystemError, IntegrityError, PersistenceError, UsageError
from .settings import EngineSettings

__all__ = [
    "EngineError",
    "EngineSettings",
    "InconsistentSystemError",
    "IntegrityError",
    "PersistenceError",
    "UsageError",
]
