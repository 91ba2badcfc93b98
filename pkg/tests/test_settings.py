"""
Unit tests for the EngineSettings class.
"""

import json
import os
import tempfile
import unittest
from unittest.mock import patch

from src.core.errors import UsageError
from src.core.settings import FLOOR_CAP_ENV, WORKERS_ENV, EngineSettings


class TestEngineSettings(unittest.TestCase):
    """Test cases for the EngineSettings class."""

    def setUp(self):
        """Set up test environment before each test."""
        # Reset the singleton instance
        EngineSettings.reset()

    def tearDown(self):
        EngineSettings.reset()

    def test_singleton_pattern(self):
        """Test that EngineSettings implements the singleton pattern correctly."""
        settings1 = EngineSettings()
        settings2 = EngineSettings()

        # Both variables should reference the same instance
        self.assertIs(settings1, settings2)

    def test_defaults(self):
        """Test the default settings."""
        with patch.dict(os.environ, {}, clear=True):
            settings = EngineSettings()
        self.assertEqual(settings.weight_floor, -2)
        self.assertEqual(settings.workers, 1)
        self.assertIsNone(settings.get("weight_floor_cap"))
        self.assertEqual(settings.get("hall_order"), "standard")

    def test_update_settings(self):
        """Test updating settings; None values leave earlier values alone."""
        settings = EngineSettings()
        settings.update_settings({"weight_floor": -3, "workers": 4})
        settings.update_settings({"weight_floor": None})

        self.assertEqual(settings.weight_floor, -3)
        self.assertEqual(settings.workers, 4)
        self.assertEqual(settings.get("hall_order"), "standard")  # Unchanged

    def test_invalid_updates(self):
        """Test that unknown keys and bad values are rejected."""
        settings = EngineSettings()
        with self.assertRaises(UsageError):
            settings.update_settings({"theme": "dark"})
        with self.assertRaises(UsageError):
            settings.update_settings({"weight_floor": 0})
        with self.assertRaises(UsageError):
            settings.update_settings({"workers": 0})
        with self.assertRaises(UsageError):
            settings.update_settings({"hall_order": "random"})

    def test_environment(self):
        """Test that environment variables are read on first construction."""
        with patch.dict(os.environ, {FLOOR_CAP_ENV: "-3", WORKERS_ENV: "2"}):
            settings = EngineSettings()
        self.assertEqual(settings.get("weight_floor_cap"), -3)
        self.assertEqual(settings.workers, 2)

    def test_bad_environment_ignored(self):
        with patch.dict(os.environ, {FLOOR_CAP_ENV: "deep"}, clear=True):
            settings = EngineSettings()
        self.assertIsNone(settings.get("weight_floor_cap"))

    def test_effective_floor_cap(self):
        """Test that a deeper requested floor is clamped to the cap."""
        settings = EngineSettings()
        settings.update_settings({"weight_floor_cap": -3})
        with self.assertLogs("src.core.settings", level="WARNING"):
            self.assertEqual(settings.effective_floor(-5), -3)
        self.assertEqual(settings.effective_floor(-2), -2)
        self.assertEqual(settings.effective_floor(), settings.weight_floor)
        with self.assertRaises(UsageError):
            settings.effective_floor(0)

    def test_load_file(self):
        """Test merging settings from a JSON file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "settings.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"weight_floor": -3, "hall_order": "reversed"}, f)
            settings = EngineSettings()
            settings.load_file(path)
            self.assertEqual(settings.weight_floor, -3)
            self.assertEqual(settings.get("hall_order"), "reversed")

            with open(path, "w", encoding="utf-8") as f:
                f.write("[1, 2]")
            with self.assertRaises(UsageError):
                settings.load_file(path)
            with self.assertRaises(UsageError):
                settings.load_file(os.path.join(tmp, "missing.json"))

    def test_settings_copy(self):
        settings = EngineSettings()
        snapshot = settings.settings
        snapshot["workers"] = 99
        self.assertNotEqual(settings.workers, 99)


if __name__ == "__main__":
    unittest.main()
