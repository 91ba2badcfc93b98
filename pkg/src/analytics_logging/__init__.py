"""
Computation metrics.
"""

from .analytics import ComputationMetrics, EventType

__all__ = ["ComputationMetrics", "EventType"]
