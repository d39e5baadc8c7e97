"""Tests for exact twisted heights."""

from fractions import Fraction

import pytest

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.twisted import (
    ExponentTuple,
    LinearFormSystemQ,
    QPower,
    TwistedHeightValue,
    compare_with_power,
    load_system,
    twisted_height,
)

Q = 16


def test_identity_system_heights(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """``H_16(1, 0) = 1/4`` and ``H_16(0, 1) = 4``."""
    small = twisted_height((1, 0), identity_system, half_exponents, Q)
    large = twisted_height((0, 1), identity_system, half_exponents, Q)
    assert small == TwistedHeightValue(Fraction(1, 4), Fraction(0), Fraction(Q))
    assert large == TwistedHeightValue(Fraction(4), Fraction(0), Fraction(Q))
    assert float(small.real()) == pytest.approx(0.25)
    assert small < large
    assert small.at_most_power(QPower.of(Q), "-1/2")
    assert not small.at_most_power(QPower.of(Q), -1)


@pytest.mark.parametrize("t", [2, 3, -6, 10])
@pytest.mark.parametrize("point", [(1, 0), (3, 5), (-7, 2)])
def test_height_is_projective(t: int, point: tuple[int, int]) -> None:
    """``H_Q(t x) = H_Q(x)`` by the product formula."""
    system, c = load_system(
        '{"n": 2, "forms": {"inf": [[1, "-1/2"], [0, 1]]},'
        ' "c": {"inf": ["1/2", "-1/2"]}}'
    )
    scaled = tuple(t * v for v in point)
    assert twisted_height(scaled, system, c, Q) == twisted_height(point, system, c, Q)


def test_rational_power_parameter(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """``Q = 2^(3/2)`` stays exact."""
    q = QPower(Fraction(2), Fraction(3, 2))
    value = twisted_height((1, 0), identity_system, half_exponents, q)
    assert value.at_most_power(q, "-1/2")
    assert float(value.real()) == pytest.approx(2 ** (-0.75))


def test_invalid_arguments(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """The zero vector, wrong lengths and ``Q < 1`` are refused."""
    with pytest.raises(InputError):
        twisted_height((0, 0), identity_system, half_exponents, Q)
    with pytest.raises(InputError):
        twisted_height((1, 0, 0), identity_system, half_exponents, Q)
    with pytest.raises(InputError):
        twisted_height((1, 0), identity_system, half_exponents, "1/2")


def test_compare_with_power() -> None:
    """Exact sign of ``a - base^f``."""
    assert compare_with_power(Fraction(2), Fraction(4), Fraction(1, 2)) == 0
    assert compare_with_power(Fraction(3), Fraction(4), Fraction(1, 2)) == 1
    assert compare_with_power(Fraction(0), Fraction(4), Fraction(1, 2)) == -1
    assert compare_with_power(Fraction(1, 3), Fraction(9), Fraction(-1, 2)) == 0
