"""Prometheus metrics module.

Prometheus metrics register globally, so the lab keeps exactly one
``LabMetrics`` instance per process.
"""

from typing import Optional

from .collectors import LabMetrics


class MetricsSingleton:
    """Singleton holder for the lab metrics registry."""

    _instance: Optional[LabMetrics] = None

    @classmethod
    def get_instance(cls) -> LabMetrics:
        """Get or create the singleton metrics instance.

        Returns:
            LabMetrics: The process-wide metrics registry.
        """
        if cls._instance is None:
            cls._instance = LabMetrics()
        return cls._instance


def get_lab_metrics() -> LabMetrics:
    """Get or create the lab metrics registry.

    Returns:
        LabMetrics: The metrics registry.
    """
    return MetricsSingleton.get_instance()


def get_latest_metrics() -> bytes:
    """Get the latest metrics in Prometheus format.

    Returns:
        bytes: Prometheus formatted metrics.
    """
    return get_lab_metrics().get_prometheus_metrics()
