"""Tests for the exception hierarchy and its exit codes."""

import pytest

from digit_complexity_lab.errors import (
    CacheIntegrityError,
    CacheSpecError,
    CertificationError,
    GuardRailError,
    InputError,
    LabError,
    PrecisionExhausted,
)


@pytest.mark.parametrize(
    ("error", "exit_code"),
    [
        (LabError, 1),
        (InputError, 2),
        (CertificationError, 3),
        (PrecisionExhausted, 4),
        (CacheIntegrityError, 5),
        (CacheSpecError, 6),
        (GuardRailError, 7),
    ],
)
def test_exit_codes(error: type[LabError], exit_code: int) -> None:
    """Every error class maps to its own exit code."""
    assert error.exit_code == exit_code
    assert error("boom").exit_code == exit_code


def test_hierarchy() -> None:
    """Input errors are value errors; exhaustion is a certification error."""
    assert issubclass(InputError, ValueError)
    assert issubclass(PrecisionExhausted, CertificationError)
    with pytest.raises(LabError):
        raise CacheSpecError("wrong source")
