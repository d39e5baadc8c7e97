"""Tests for run approximants and the digit-change chain."""

import pytest

from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.approximation import (
    lemma81_check,
    liouville_threshold,
    normalize_subject,
    run_approximants,
    theorem31_chain,
)
from digit_complexity_lab.errors import InputError

BOUNDARIES = [3, 10, 40, 400, 1100, 1250]
CUT_OFF = 10**6


def test_normalize_moves_to_first_top_digit(sqrt2_minus_one: AlgebraicReal) -> None:
    """``0.0110...`` becomes ``2 (sqrt 2 - 1) = 0.110...``."""
    subject = normalize_subject(sqrt2_minus_one, 2)
    assert subject.shift == 1
    assert subject.algebraic is not None
    assert subject.source.digits(8).to_string() == "11010100"


def test_normalize_without_top_digit() -> None:
    """``1/4`` has no digit 9 and is used as given."""
    subject = normalize_subject("1/4", 10, limit=20)
    assert subject.shift is None


def test_run_approximants_are_certified(sqrt2_minus_one: AlgebraicReal) -> None:
    """Numerators are not divisible by ``b``; Liouville's bound holds."""
    subject, runs = run_approximants(sqrt2_minus_one, 2, 8)
    assert subject.shift == 1
    assert [r.j for r in runs] == list(range(1, 9))
    assert all(r.numerator % 2 == 1 for r in runs)
    assert all(r.n < r.n_next for r in runs)
    assert all(r.liouville for r in runs)


def test_liouville_threshold(sqrt2_minus_one: AlgebraicReal) -> None:
    """Run ends past ``U`` at most multiply by ``2d``."""
    report = liouville_threshold(sqrt2_minus_one, 2)
    assert report.degree == 2
    assert report.passed
    assert report.checked
    with pytest.raises(InputError):
        liouville_threshold(AlgebraicReal.rational("1/3"), 2)


def test_lemma81_check(sqrt2_minus_one: AlgebraicReal) -> None:
    """Every large jump comes with its certified side conditions."""
    report = lemma81_check(sqrt2_minus_one, 2, "1/2", j_max=60)
    assert report.approximation_ok
    assert report.valuation_ok
    assert report.exponent_sum_ok
    assert report.within_bound


@pytest.mark.parametrize("epsilon", ["0", "3/2"])
def test_lemma81_epsilon_range(sqrt2_minus_one: AlgebraicReal, epsilon: str) -> None:
    """Epsilon must lie in ``(0, 1]``."""
    with pytest.raises(InputError):
        lemma81_check(sqrt2_minus_one, 2, epsilon)


def test_theorem31_chain_passes() -> None:
    """A synthetic run-end list that satisfies every link of the chain."""
    chain = theorem31_chain(BOUNDARIES, 1300, 2, CUT_OFF, 5)
    assert chain.j0 == 2
    assert chain.hypothesis
    assert (chain.j2, chain.n_j2) == (5, 1100)
    assert chain.n_j2_large
    assert chain.threshold_ok
    assert chain.passed


def test_theorem31_chain_needs_long_prefix() -> None:
    """The prefix must reach past ``6 d J^(1/3)``."""
    with pytest.raises(InputError):
        theorem31_chain(BOUNDARIES, 1200, 2, CUT_OFF, 5)
    with pytest.raises(InputError):
        theorem31_chain(BOUNDARIES, 1300, 2, 1, 5)
