"""Tests for the prometheus metrics module."""

from typing import TYPE_CHECKING

from digit_complexity_lab.metrics import LabMetrics
from digit_complexity_lab.metrics.prometheus import get_lab_metrics, get_latest_metrics

if TYPE_CHECKING:
    from pytest_mock import MockerFixture


def test_get_lab_metrics() -> None:
    """Test getting the global metrics instance."""
    metrics1 = get_lab_metrics()
    assert isinstance(metrics1, LabMetrics)

    # Second call should return the same instance
    metrics2 = get_lab_metrics()
    assert metrics2 is metrics1


def test_get_latest_metrics(mocker: "MockerFixture") -> None:
    """Test getting latest metrics in Prometheus format."""
    metrics = get_lab_metrics()
    mock_prometheus_data = b"mock prometheus data"
    mocker.patch.object(
        metrics, "get_prometheus_metrics", return_value=mock_prometheus_data
    )

    assert get_latest_metrics() == mock_prometheus_data
    metrics.get_prometheus_metrics.assert_called_once()
