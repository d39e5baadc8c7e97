"""Tests for the explicit counts and thresholds."""

import math
from fractions import Fraction

import pytest

from digit_complexity_lab.bounds import (
    cor52_count,
    cor52_threshold,
    cugiani_epsilon,
    hadamard_bound,
    lemma81_count,
    t1,
    t2,
    theorem31_threshold,
    theorem51_count,
    theorem51_threshold,
)
from digit_complexity_lab.errors import InputError

T2_R3_DELTA1 = 2**25 * math.log(6) * math.log(math.log(6))


def test_t2_value() -> None:
    """``t2(3, 1) = 2^25 log 6 log log 6``, about ``3.506e7``."""
    value = t2(3, 1)
    assert float(value) == pytest.approx(T2_R3_DELTA1, rel=1e-12)
    assert float(value) == pytest.approx(3.506e7, rel=1e-3)
    assert value.width < Fraction(1, 10**6)


def test_t1_higher_dimension() -> None:
    """``n >= 3`` uses the ``4^((n+8)^2)`` form."""
    expected = 4.0**121 * math.log(6) * math.log(math.log(6))
    assert float(t1(3, 3, 1)) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    ("n", "r", "delta"),
    [(1, 3, "1"), (2, 1, "1"), (2, 3, "0"), (2, 3, "3/2"), (3, 2, "1/2")],
)
def test_t1_domain(n: int, r: int, delta: str) -> None:
    """``n >= 2``, ``r >= n`` and ``0 < delta <= 1``."""
    with pytest.raises(InputError):
        t1(n, r, delta)


def test_theorem51_count_two_dimensional() -> None:
    """The ``n = 2`` branch."""
    factor, log_2rd = 2.0, math.log(4)
    expected = 2**32 * factor**3 * log_2rd * math.log(factor * log_2rd)
    assert float(theorem51_count(2, 2, 1, 1)) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(InputError):
        theorem51_count(2, 2, 1, 0)


def test_thresholds() -> None:
    """``max(2H, n^(2n/eps))`` and ``max(2 H(xi), 2^(4/eps))``."""
    assert float(theorem51_threshold(2, 1, 1)) == pytest.approx(16)
    assert float(cor52_threshold(1, 1)) == pytest.approx(16)
    assert float(cor52_threshold(100, 1)) == pytest.approx(200)
    with pytest.raises(InputError):
        cor52_threshold(0, 1)
    with pytest.raises(InputError):
        theorem51_threshold(2, 1, 0)


def test_cor52_count() -> None:
    """``2^32 (1+1/eps)^3 log(6d) log((1+1/eps) log(6d))``."""
    expected = 2**32 * 8 * math.log(12) * math.log(2 * math.log(12))
    assert float(cor52_count(2, 1)) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("epsilon", ["1", "1/2", "1/10", "1/1000"])
@pytest.mark.parametrize("d", [1, 2, 5])
def test_lemma81_count_dominates_cor52(d: int, epsilon: str) -> None:
    """The run-jump constant is at least the line count it replaces."""
    assert cor52_count(d, epsilon).le(lemma81_count(d, epsilon)) is True


def test_lemma81_count_domain() -> None:
    """Epsilon must lie in ``(0, 1]``."""
    with pytest.raises(InputError):
        lemma81_count(2, "3/2")


def test_theorem31_threshold() -> None:
    """``c1 (log n)^(3/2) (log log n)^(-1/2) (log 6d)^(-1/2)``."""
    n, d = 10**6, 2
    expected = (
        math.log(n) ** 1.5 / math.sqrt(math.log(math.log(n))) / math.sqrt(math.log(12))
    )
    assert float(theorem31_threshold(n, d)) == pytest.approx(expected, rel=1e-12)
    assert float(theorem31_threshold(n, d, 2)) == pytest.approx(2 * expected)
    with pytest.raises(InputError):
        theorem31_threshold(2, d)


def test_hadamard_bound() -> None:
    """``n^(n/2) H^r``."""
    assert float(hadamard_bound(2, 2, 1)) == pytest.approx(2)
    assert float(hadamard_bound(4, 5, 3)) == pytest.approx(16 * 3**5)


def test_cugiani_epsilon_decays() -> None:
    """The extra exponent shrinks for large ``y``."""
    small = cugiani_epsilon(1, 1, 10**6)
    large = cugiani_epsilon(1, 1, 10**60)
    assert small.lo > 0
    assert large.lt(small) is True
    with pytest.raises(InputError):
        cugiani_epsilon(1, 1, 0)
