"""Tests for the approximation searches."""

from fractions import Fraction
from math import sqrt

import pytest

from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.approximation import (
    ExponentSystem,
    convergents,
    cugiani_scan,
    group_by_line,
    ridout_solutions,
    solutions_to_csv,
)
from digit_complexity_lab.errors import InputError

SQRT2_CONVERGENTS = [
    Fraction(1),
    Fraction(3, 2),
    Fraction(7, 5),
    Fraction(17, 12),
    Fraction(41, 29),
    Fraction(99, 70),
]
Y_MAX = 100


def test_convergents_of_sqrt2(sqrt2: AlgebraicReal) -> None:
    """Convergents of ``[1; 2, 2, ...]``."""
    assert convergents(sqrt2, 6) == SQRT2_CONVERGENTS


def test_convergents_of_rational() -> None:
    """A rational has finitely many convergents."""
    assert convergents(AlgebraicReal.rational("7/3"), 5) == [
        Fraction(2),
        Fraction(7, 3),
    ]
    with pytest.raises(InputError):
        convergents(AlgebraicReal.rational("7/3"), 0)


def test_ridout_scan_finds_convergents(sqrt2: AlgebraicReal) -> None:
    """Every convergent below ``y_max`` solves ``|sqrt 2 - x/y| <= y^-2.1``."""
    system = ExponentSystem.of("21/10")
    report = ridout_solutions(sqrt2, system, Y_MAX)
    pairs = [(s.x, s.y) for s in report.solutions]
    assert report.epsilon == Fraction(1, 10)
    assert pairs == sorted(pairs, key=lambda p: (p[1], p[0]))
    for c in SQRT2_CONVERGENTS:
        assert (c.numerator, c.denominator) in pairs
    for x, y in pairs:
        assert abs(sqrt(2) - x / y) <= y ** -2.1 * (1 + 1e-9)


def test_parallel_scan_matches_serial(sqrt2: AlgebraicReal) -> None:
    """Worker processes return the same merged list."""
    system = ExponentSystem.of("21/10")
    serial = ridout_solutions(sqrt2, system, 60)
    parallel = ridout_solutions(sqrt2, system, 60, workers=2)
    assert serial.solutions == parallel.solutions


def test_ridout_needs_exponents_above_two(sqrt2: AlgebraicReal) -> None:
    """``sum f = 2`` leaves no room for the count."""
    with pytest.raises(InputError):
        ridout_solutions(sqrt2, ExponentSystem.of(2), Y_MAX)


def test_exponent_system_validation() -> None:
    """Places must be primes and exponents non-negative."""
    assert ExponentSystem.of(1, {2: "1/2"}, {3: "1/2"}).total == 2
    with pytest.raises(InputError):
        ExponentSystem.of(1, {4: 1})
    with pytest.raises(InputError):
        ExponentSystem.of(0)
    with pytest.raises(InputError):
        ExponentSystem.of(1, {2: -1})


def test_group_by_line_and_csv() -> None:
    """Multiples share a group; ids follow first appearance."""
    solutions = group_by_line([(1, 1), (3, 2), (2, 2), (6, 4)])
    assert [s.group_id for s in solutions] == [0, 1, 0, 1]
    text = solutions_to_csv(solutions)
    assert text.splitlines()[0] == "x,y,group_id"
    assert text.splitlines()[2] == "3,2,1"


@pytest.mark.slow
def test_cugiani_scan_reports_reduced_solutions(sqrt2: AlgebraicReal) -> None:
    """Solutions are coprime and ordered; one ratio per consecutive pair."""
    report = cugiani_scan(sqrt2, ExponentSystem.of(2), 1, 1, 50)
    assert all(Fraction(x, y).denominator == y for x, y in report.solutions)
    assert len(report.ratios) == max(len(report.solutions) - 1, 0)


def test_cugiani_arguments(sqrt2: AlgebraicReal) -> None:
    """The exponents must sum to exactly 2."""
    with pytest.raises(InputError):
        cugiani_scan(sqrt2, ExponentSystem.of("21/10"), 1, 1, 10)
    with pytest.raises(InputError):
        cugiani_scan(sqrt2, ExponentSystem.of(2), 0, 1, 10)
    with pytest.raises(InputError):
        cugiani_scan(sqrt2, ExponentSystem.of(2), 1, 0, 10)
