"""Models for data structures."""

from digit_complexity_lab.models.api import (
    DigitsRequest,
    DigitsResponse,
    ErrorResponse,
    HealthStatus,
)
from digit_complexity_lab.models.results import (
    BoundResult,
    ExperimentReport,
    FactorizationRecord,
    FormulaInfo,
)
from digit_complexity_lab.models.systems import SystemDescription

__all__ = [
    "BoundResult",
    "DigitsRequest",
    "DigitsResponse",
    "ErrorResponse",
    "ExperimentReport",
    "FactorizationRecord",
    "FormulaInfo",
    "HealthStatus",
    "SystemDescription",
]
