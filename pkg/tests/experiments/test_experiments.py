"""Tests for the experiment registry and the three digit experiments."""

import math

import pytest

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.experiments import (
    EXPERIMENTS,
    Corollary32Experiment,
    Theorem31Experiment,
    corollary32_source,
    dyadic_grid,
    fit_log_exponent,
    get_experiment,
)
from digit_complexity_lab.sources import (
    AlgebraicDigitSource,
    ChampernowneSource,
    as_source,
)

GRID_DIGITS = 1025
GRID = [16, 32, 64, 128, 256, 512, 1024]
FULL_SCALE_DIGITS = 2**20


def test_registry() -> None:
    """All three experiments are registered by name."""
    assert set(EXPERIMENTS) == {"theorem21", "theorem31", "corollary32"}
    experiment = get_experiment("theorem31", d=2)
    assert isinstance(experiment, Theorem31Experiment)
    assert experiment.parameters == {"d": 2}
    with pytest.raises(InputError, match="unknown experiment"):
        get_experiment("theorem99")


def test_dyadic_grid() -> None:
    """Powers of two from 16 with one digit to spare."""
    assert dyadic_grid(GRID_DIGITS) == GRID
    assert dyadic_grid(100) == [16, 32, 64]
    with pytest.raises(InputError, match="need at least 65"):
        dyadic_grid(64)


def test_fit_log_exponent() -> None:
    """``(log n)^2`` has slope 2 against ``log log n``."""
    values = [math.log(n) ** 2 for n in GRID]
    assert fit_log_exponent(GRID, values) == pytest.approx(2)
    with pytest.raises(InputError):
        fit_log_exponent(GRID, [0.0] * len(GRID))


def test_theorem31_on_sqrt2(sqrt2_binary: AlgebraicDigitSource) -> None:
    """The table covers the grid and ``c1_fit`` is the smallest ratio."""
    report = Theorem31Experiment().run(sqrt2_binary, GRID_DIGITS)
    assert report.name == "theorem31"
    assert report.kind == "diagnostic"
    assert report.passed is None
    assert [row[0] for row in report.rows] == GRID
    assert report.summary["degree"] == 2
    assert report.summary["reference_exponent"] == 1.5
    assert report.summary["c1_fit"] == pytest.approx(min(r[3] for r in report.rows))
    # nbdc is non-decreasing along the grid
    counts = [row[1] for row in report.rows]
    assert counts == sorted(counts)


def test_theorem31_rejects_rationals() -> None:
    """Rational subjects have no degree to test."""
    with pytest.raises(InputError, match="irrational"):
        Theorem31Experiment().run(as_source("1/4", 2), GRID_DIGITS)


def test_theorem31_needs_degree_for_other_sources() -> None:
    """Champernowne words take the degree from the parameters."""
    source = ChampernowneSource(2)
    with pytest.raises(InputError, match="parameter d"):
        Theorem31Experiment().run(source, GRID_DIGITS)
    report = Theorem31Experiment(d=3).run(source, GRID_DIGITS)
    assert report.summary["degree"] == 3


def test_theorem21_running_supremum() -> None:
    """The running supremum never decreases."""
    report = get_experiment("theorem21", n_max=20).run(ChampernowneSource(2), 500)
    assert [row[0] for row in report.rows] == list(range(2, 21))
    running = [row[3] for row in report.rows]
    assert running == sorted(running)
    assert report.summary["running_sup"] == running[-1]
    with pytest.raises(InputError):
        get_experiment("theorem21", n_max=600).run(ChampernowneSource(2), 500)


def test_corollary32_summary() -> None:
    """Digit changes stay below twice the number of terms."""
    source = corollary32_source("4/5")
    report = Corollary32Experiment(eta="4/5", d=[2, 3]).run(source, GRID_DIGITS)
    summary = report.summary
    assert summary["eta"] == "4/5"
    assert summary["expected_exponent"] == pytest.approx(1.25)
    assert summary["below_term_count"]
    assert set(summary["below_threshold"]) == {"2", "3"}
    assert report.columns == ["n", "nbdc", "twice_term_count"]
    assert report.subject == source.spec_string()


def test_corollary32_needs_gap_series(sqrt2_binary: AlgebraicDigitSource) -> None:
    """Other sources are refused."""
    with pytest.raises(InputError, match="gap series"):
        Corollary32Experiment().run(sqrt2_binary, GRID_DIGITS)


@pytest.mark.slow
def test_corollary32_exponents_at_full_scale() -> None:
    """Twice the term count grows like ``(log n)^1.25`` and bounds ``nbdc``.

    Terms sharing an exponent merge into blocks of two or three, so the fitted
    ``nbdc`` exponent stays near 1 on this grid, below the term count.
    """
    source = corollary32_source("4/5")
    report = Corollary32Experiment(eta="4/5", d=[2]).run(source, FULL_SCALE_DIGITS)
    summary = report.summary
    assert summary["term_count_exponent"] == pytest.approx(1.25, abs=0.15)
    assert summary["term_count_within_tolerance"]
    assert summary["below_term_count"]
    assert summary["observed_exponent"] == pytest.approx(1.05, abs=0.05)
    assert summary["observed_exponent"] < summary["term_count_exponent"]
    assert report.rows[-1][:2] == [2**19, 36]
