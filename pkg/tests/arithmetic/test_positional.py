"""Tests for integer and digit string conversion."""

import random

import pytest

from digit_complexity_lab.arithmetic import digits_to_int, int_to_digits
from digit_complexity_lab.errors import InputError

LONG_WIDTH = 1000


def test_small_conversions() -> None:
    """Leading zeros pad to the requested width."""
    assert int_to_digits(5, 2, 4) == bytes([0, 1, 0, 1])
    assert int_to_digits(255, 16, 3) == bytes([0, 15, 15])
    assert int_to_digits(0, 10, 0) == b""
    assert digits_to_int(bytes([1, 0, 1]), 2) == 5


def test_long_conversion_matches_string_formatting() -> None:
    """The divide-and-conquer path agrees with Python's decimal conversion."""
    rng = random.Random(7)
    value = rng.randrange(10 ** (LONG_WIDTH - 1), 10**LONG_WIDTH)
    digits = int_to_digits(value, 10, LONG_WIDTH)
    assert "".join(str(d) for d in digits) == str(value)
    assert digits_to_int(digits, 10) == value


def test_value_too_wide() -> None:
    """A value needing more digits than the width is refused."""
    with pytest.raises(InputError):
        int_to_digits(8, 2, 3)
    with pytest.raises(InputError):
        int_to_digits(10**70, 10, 70)
    with pytest.raises(InputError):
        int_to_digits(-1, 10, 3)
