"""
Unit tests for the ComputationMetrics class.
"""

import json
import tempfile
import unittest

from src.analytics_logging import ComputationMetrics, EventType


class TestComputationMetrics(unittest.TestCase):
    """Test cases for the ComputationMetrics class."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.metrics = ComputationMetrics(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_log_event_writes_jsonl(self):
        self.assertTrue(self.metrics.log_event(EventType.QUOTIENT_BUILT, {"kind": "labute"}))
        with open(self.metrics.event_log_path, "r", encoding="utf-8") as f:
            lines = [json.loads(line) for line in f]
        self.assertEqual(len(lines), 1)
        self.assertEqual(lines[0]["event_type"], "quotient_built")
        self.assertEqual(lines[0]["data"], {"kind": "labute"})

    def test_disabled(self):
        self.metrics.enabled = False
        self.assertFalse(self.metrics.log_event(EventType.RUN_START))
        self.assertEqual(self.metrics.events, [])

    def test_in_memory_only(self):
        metrics = ComputationMetrics()
        self.assertIsNone(metrics.event_log_path)
        metrics.log_error("boom", "usage")
        self.assertEqual(metrics.get_event_counts(), {"error": 1})
        self.assertEqual(metrics.events[0]["data"], {"error_message": "boom", "error_type": "usage"})

    def test_timed_records_operation(self):
        with self.metrics.timed("solve", EventType.SYMBOLIC_SOLVED, {"n": 1}) as details:
            details["constraints"] = 1
        stats = self.metrics.get_operation_stats()["solve"]
        self.assertEqual(stats["count"], 1)
        self.assertEqual(stats["failures"], 0)
        self.assertGreaterEqual(stats["avg_seconds"], 0.0)
        event = self.metrics.events[-1]
        self.assertEqual(event["event_type"], "symbolic_solved")
        self.assertEqual(event["data"]["constraints"], 1)
        self.assertTrue(event["data"]["success"])

    def test_timed_counts_failures(self):
        with self.assertRaises(RuntimeError):
            with self.metrics.timed("build"):
                raise RuntimeError("fail")
        self.assertEqual(self.metrics.get_operation_stats()["build"]["failures"], 1)
        # no event type, no event
        self.assertEqual(self.metrics.events, [])

    def test_session_stats_and_clear(self):
        self.metrics.log_event(EventType.RUN_START)
        self.metrics.log_event(EventType.RUN_EXIT)
        self.assertEqual(self.metrics.get_session_stats()["event_count"], 2)
        self.metrics.clear()
        self.assertEqual(self.metrics.get_event_counts(), {})


if __name__ == "__main__":
    unittest.main()
