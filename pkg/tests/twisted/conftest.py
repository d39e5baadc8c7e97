"""Fixtures for twisted-height tests."""

import pytest

from digit_complexity_lab.twisted import ExponentTuple, LinearFormSystemQ


@pytest.fixture
def identity_system() -> LinearFormSystemQ:
    """Coordinate forms at every place of Q."""
    return LinearFormSystemQ.identity(2)


@pytest.fixture
def half_exponents() -> ExponentTuple:
    """``c = (1/2, -1/2)`` at infinity."""
    return ExponentTuple.of(2, {"inf": ("1/2", "-1/2")})
