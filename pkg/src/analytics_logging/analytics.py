"""
Computation metrics module.

This module records what the engine computed and how long it took:
quotient builds, section checks, symbolic solves and errors. Events are
kept in memory for the session and, when a storage directory is given,
appended to a JSON-lines file. Metrics never enter reports or
certificates, which stay byte-identical across runs.
"""

import json
import logging
import os
import time
from contextlib import contextmanager
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Union

logger = logging.getLogger(__name__)


class EventType(Enum):
    """Types of events recorded by the metrics collector."""

    RUN_START = "run_start"
    RUN_EXIT = "run_exit"
    ERROR = "error"

    QUOTIENT_BUILT = "quotient_built"
    SECTION_CHECKED = "section_checked"
    SYMBOLIC_SOLVED = "symbolic_solved"
    SCHUR_SOLVED = "schur_solved"
    CERTIFICATE_VERIFIED = "certificate_verified"


class ComputationMetrics:
    """
    Collector for computation events and timings.

    Args:
        storage_dir: Optional directory for the JSON-lines event log. Nothing
            is written to disk when it is None.
        enabled: Whether events are recorded at all.
    """

    def __init__(self, storage_dir: Optional[Union[str, Path]] = None, enabled: bool = True):
        self._storage_dir = Path(storage_dir) if storage_dir is not None else None
        if self._storage_dir is not None:
            os.makedirs(self._storage_dir, exist_ok=True)
        self._enabled = enabled
        self._session_id = datetime.now().strftime("%Y%m%d%H%M%S")
        self._session_start_time = time.time()
        self._events: List[Dict[str, Any]] = []
        self._operations: Dict[str, Dict[str, float]] = {}
        self._event_log_path = (
            self._storage_dir / f"events_{self._session_id}.jsonl" if self._storage_dir is not None else None
        )
        logger.debug(f"ComputationMetrics initialized (storage: {self._storage_dir})")

    @property
    def enabled(self) -> bool:
        return self._enabled

    @enabled.setter
    def enabled(self, value: bool):
        self._enabled = value
        logger.debug(f"Metrics collection {'enabled' if value else 'disabled'}")

    @property
    def events(self) -> List[Dict[str, Any]]:
        return list(self._events)

    @property
    def event_log_path(self) -> Optional[Path]:
        return self._event_log_path

    def log_event(self, event_type: EventType, data: Optional[Dict[str, Any]] = None) -> bool:
        """
        Record an event.

        Args:
            event_type: The type of event.
            data: JSON-serializable details.

        Returns:
            True if the event was recorded, False if disabled or on failure.
        """
        if not self._enabled:
            return False
        event: Dict[str, Any] = {
            "event_type": event_type.value,
            "timestamp": datetime.now().isoformat(),
            "session_id": self._session_id,
        }
        if data:
            event["data"] = data
        self._events.append(event)
        if self._event_log_path is not None:
            try:
                with open(self._event_log_path, "a", encoding="utf-8") as f:
                    f.write(json.dumps(event, sort_keys=True) + "\n")
            except OSError as e:
                logger.error(f"Error writing event {event_type.value}: {e}")
                return False
        logger.debug(f"Recorded event: {event_type.value}")
        return True

    def log_error(self, error_message: str, error_type: Optional[str] = None) -> bool:
        data = {"error_message": error_message}
        if error_type:
            data["error_type"] = error_type
        return self.log_event(EventType.ERROR, data)

    @contextmanager
    def timed(
        self, operation: str, event_type: Optional[EventType] = None, data: Optional[Dict[str, Any]] = None
    ) -> Iterator[Dict[str, Any]]:
        """
        Time a block and record its duration under ``operation``.

        The yielded dict may be filled with extra details inside the block;
        they are attached to the event logged on exit.
        """
        details: Dict[str, Any] = dict(data or {})
        start = time.perf_counter()
        success = False
        try:
            yield details
            success = True
        finally:
            elapsed = time.perf_counter() - start
            stats = self._operations.setdefault(operation, {"count": 0, "total_seconds": 0.0, "failures": 0})
            stats["count"] += 1
            stats["total_seconds"] += elapsed
            if not success:
                stats["failures"] += 1
            if event_type is not None:
                self.log_event(event_type, dict(details, operation=operation, seconds=elapsed, success=success))

    def get_operation_stats(self) -> Dict[str, Dict[str, float]]:
        """Per-operation count, total and average seconds, and failures."""
        out = {}
        for name, stats in self._operations.items():
            count = stats["count"]
            out[name] = dict(stats, avg_seconds=stats["total_seconds"] / count if count else 0.0)
        return out

    def get_session_stats(self) -> Dict[str, Any]:
        return {
            "session_id": self._session_id,
            "start_time": datetime.fromtimestamp(self._session_start_time).isoformat(),
            "duration_seconds": time.time() - self._session_start_time,
            "event_count": len(self._events),
        }

    def get_event_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for event in self._events:
            counts[event["event_type"]] = counts.get(event["event_type"], 0) + 1
        return counts

    def clear(self) -> None:
        self._events.clear()
        self._operations.clear()
        logger.info("Cleared in-memory metrics")
