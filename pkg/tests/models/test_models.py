"""Tests for the pydantic models."""

import pytest
from pydantic import ValidationError

from digit_complexity_lab.models import (
    BoundResult,
    DigitsRequest,
    ExperimentReport,
    SystemDescription,
)


def test_system_description_defaults() -> None:
    """Forms and exponents default to empty mappings."""
    description = SystemDescription(n=3)
    assert description.forms == {}
    assert description.c == {}
    assert description.r is None


def test_system_description_validation() -> None:
    """Dimensions below 2 are refused."""
    with pytest.raises(ValidationError):
        SystemDescription(n=1)
    with pytest.raises(ValidationError):
        SystemDescription(n=2, r=1)


def test_bound_result_defaults() -> None:
    """Only the formula, the enclosure and the precision are required."""
    result = BoundResult(formula="t2", lower="1", upper="2", precision_bits=200)
    assert result.log_base == "e"
    assert result.value is None
    assert result.notes == []


def test_experiment_report_kind() -> None:
    """Reports are diagnostic unless stated otherwise."""
    report = ExperimentReport(name="theorem31", subject="s", base=2, digits=10)
    assert report.kind == "diagnostic"
    assert report.passed is None
    with pytest.raises(ValidationError):
        ExperimentReport(name="x", kind="other", subject="s", base=2, digits=10)


def test_digits_request_bounds() -> None:
    """Bases lie in ``[2, 256]`` and counts are positive."""
    request = DigitsRequest(minpoly=[-2, 0, 1], interval=("1", "3/2"))
    assert (request.base, request.count, request.shift) == (2, 64, "0")
    with pytest.raises(ValidationError):
        DigitsRequest(minpoly=[-2, 0, 1], interval=("1", "3/2"), base=257)
    with pytest.raises(ValidationError):
        DigitsRequest(minpoly=[-2, 0, 1], interval=("1", "3/2"), count=0)
