"""Tests for certified digits of algebraic numbers."""

from math import isqrt

import pytest

from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.errors import GuardRailError, InputError
from digit_complexity_lab.sources import (
    AlgebraicDigitSource,
    ShiftedSource,
    as_source,
    digits_of_algebraic,
    first_digit_shift,
)

BINARY_DIGITS = 64
DECIMAL_DIGITS = 20


def _sqrt2_minus_one_oracle(base: int, count: int) -> list[int]:
    """Digits of ``floor(base^count (sqrt 2 - 1))`` from an integer square root."""
    scale = base**count
    value = isqrt(2 * scale * scale) - scale
    digits = []
    for _ in range(count):
        value, digit = divmod(value, base)
        digits.append(digit)
    return digits[::-1]


@pytest.mark.exact
@pytest.mark.parametrize(
    ("base", "count"), [(2, BINARY_DIGITS), (10, DECIMAL_DIGITS)]
)
def test_sqrt2_digits_match_integer_root(
    sqrt2_minus_one: AlgebraicReal, base: int, count: int
) -> None:
    """Binary and decimal digits agree with the integer-root oracle."""
    word = digits_of_algebraic(sqrt2_minus_one, base, count)
    assert word.digits() == _sqrt2_minus_one_oracle(base, count)


def test_decimal_prefix(sqrt2_minus_one: AlgebraicReal) -> None:
    """``sqrt 2 - 1 = 0.41421356...``."""
    assert digits_of_algebraic(sqrt2_minus_one, 10, 8).to_string() == "41421356"


def test_stream_extends_consistently(sqrt2_binary: AlgebraicDigitSource) -> None:
    """A longer request keeps the earlier digits."""
    short = sqrt2_binary.digits(10)
    long = sqrt2_binary.digits(100)
    assert long.prefix(10) == short
    assert len(sqrt2_binary.stream) >= 100


@pytest.mark.exact
def test_rational_digits_are_canonical() -> None:
    """``1/2`` in base 2 is ``1000...``, never ``0111...``."""
    source = AlgebraicDigitSource(AlgebraicReal.rational("1/2"), 2)
    assert source.digits(6).to_string() == "100000"
    assert source.is_rational


def test_subject_outside_unit_interval(sqrt2: AlgebraicReal) -> None:
    """Digit sources need ``0 < x < 1``."""
    with pytest.raises(InputError):
        AlgebraicDigitSource(sqrt2, 2)
    with pytest.raises(InputError):
        AlgebraicDigitSource(AlgebraicReal.rational(2), 2)


def test_guard_rail(sqrt2_minus_one: AlgebraicReal) -> None:
    """Requests beyond ``max_digits`` are refused before any work."""
    source = AlgebraicDigitSource(sqrt2_minus_one, 2, max_digits=16)
    with pytest.raises(GuardRailError):
        source.digits(17)
    with pytest.raises(InputError):
        source.digits(0)


def test_shifted_source(sqrt2_binary: AlgebraicDigitSource) -> None:
    """The shifted source drops the first digits."""
    shifted = ShiftedSource(sqrt2_binary, 5)
    assert shifted.digits(20) == sqrt2_binary.digits(25)[5:]
    assert shifted.spec_string().endswith(":shift=5")
    lo, hi = shifted.enclosure(40)
    assert 0 <= lo <= hi <= 1


def test_as_source_and_first_digit_shift(sqrt2_minus_one: AlgebraicReal) -> None:
    """Plain values become sources; ``0.0110...`` has its first 1 after one digit."""
    source = as_source(sqrt2_minus_one, 2)
    assert isinstance(source, AlgebraicDigitSource)
    assert first_digit_shift(source, 1, 10) == 1
    assert first_digit_shift(as_source("1/4", 10), 9, 20) is None
    with pytest.raises(InputError):
        as_source(source, 10)
