"""
Engine settings module.

This module holds the process-wide configuration of the engine: default
weight floor, the global floor cap, worker count and the optional metrics
and certificate-store locations. Values come from built-in defaults, an
optional JSON file, environment variables and finally explicit updates,
in that order of increasing priority.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .errors import UsageError

logger = logging.getLogger(__name__)

FLOOR_CAP_ENV = "HYPSEC_WEIGHT_FLOOR_CAP"
WORKERS_ENV = "HYPSEC_WORKERS"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "weight_floor": -2,
    "weight_floor_cap": None,
    "workers": 1,
    "metrics_dir": None,
    "store_path": None,
    "hall_order": "standard",
}


class EngineSettings:
    """
    Singleton holding the engine configuration.

    Every ``EngineSettings()`` call returns the same instance; tests call
    :meth:`reset` to start from a clean state.
    """

    _instance: Optional["EngineSettings"] = None

    def __new__(cls):
        if cls._instance is None:
            instance = super().__new__(cls)
            instance._settings = dict(DEFAULT_SETTINGS)
            instance._load_environment()
            cls._instance = instance
            logger.debug("EngineSettings initialized")
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Drop the shared instance so the next call rebuilds it from defaults."""
        cls._instance = None

    def _load_environment(self) -> None:
        cap = os.environ.get(FLOOR_CAP_ENV)
        if cap:
            try:
                self._settings["weight_floor_cap"] = int(cap)
            except ValueError:
                logger.warning(f"Ignoring non-integer {FLOOR_CAP_ENV}={cap!r}")
        workers = os.environ.get(WORKERS_ENV)
        if workers:
            try:
                self._settings["workers"] = max(1, int(workers))
            except ValueError:
                logger.warning(f"Ignoring non-integer {WORKERS_ENV}={workers!r}")

    @property
    def settings(self) -> Dict[str, Any]:
        """A copy of the current settings."""
        return dict(self._settings)

    def get(self, key: str) -> Any:
        return self._settings[key]

    @property
    def weight_floor(self) -> int:
        return self._settings["weight_floor"]

    @property
    def workers(self) -> int:
        return self._settings["workers"]

    def update_settings(self, new_settings: Dict[str, Any]) -> None:
        """
        Merge new values into the current settings.

        Args:
            new_settings: Mapping of setting names to values. ``None`` values
                are skipped so that unset command-line flags do not override
                earlier sources.

        Raises:
            UsageError: If a key is not a known setting or a value is invalid.
        """
        unknown = set(new_settings) - set(DEFAULT_SETTINGS)
        if unknown:
            raise UsageError(f"Unknown settings: {', '.join(sorted(unknown))}")
        for key, value in new_settings.items():
            if value is None:
                continue
            if key in ("weight_floor", "weight_floor_cap") and int(value) > -1:
                raise UsageError(f"{key} must be <= -1, got {value}")
            if key == "workers" and int(value) < 1:
                raise UsageError(f"workers must be >= 1, got {value}")
            if key == "hall_order" and value not in ("standard", "reversed"):
                raise UsageError(f"hall_order must be 'standard' or 'reversed', got {value!r}")
            self._settings[key] = value
        logger.debug(f"Updated settings: {sorted(k for k, v in new_settings.items() if v is not None)}")

    def load_file(self, path: Union[str, Path]) -> None:
        """
        Merge settings from a JSON object stored in ``path``.

        Raises:
            UsageError: If the file cannot be read or does not hold an object.
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"Cannot read config file {path}: {e}") from e
        if not isinstance(data, dict):
            raise UsageError(f"Config file {path} must contain a JSON object")
        self.update_settings(data)
        logger.info(f"Loaded settings from {path}")

    def effective_floor(self, requested: Optional[int] = None) -> int:
        """
        Resolve the weight floor for one computation.

        Args:
            requested: Explicit floor, or None to use the configured default.

        Returns:
            The floor after applying the global cap.

        Raises:
            UsageError: If the floor is not <= -1.
        """
        floor = self.weight_floor if requested is None else int(requested)
        if floor > -1:
            raise UsageError(f"weight floor must be <= -1, got {floor}")
        cap = self._settings["weight_floor_cap"]
        if cap is not None and floor < cap:
            logger.warning(f"Requested weight floor {floor} exceeds cap {cap}; clamping to {cap}")
            floor = cap
        return floor
