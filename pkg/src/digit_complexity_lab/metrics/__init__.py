"""Metrics package."""

from digit_complexity_lab.metrics.collectors import LabMetrics
from digit_complexity_lab.metrics.prometheus import get_lab_metrics, get_latest_metrics

__all__ = [
    "LabMetrics",
    "get_lab_metrics",
    "get_latest_metrics",
]
