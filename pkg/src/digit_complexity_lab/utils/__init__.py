"""Utility functions for Digit Complexity Lab."""

from digit_complexity_lab.utils.logging import configure_logging
from digit_complexity_lab.utils.resources import check_memory_headroom, peak_rss_bytes

__all__ = ["check_memory_headroom", "configure_logging", "peak_rss_bytes"]
