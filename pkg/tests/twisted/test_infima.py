"""Tests for small points, the gap principle and successive infima."""

from fractions import Fraction

import numpy as np
import pytest

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.twisted import (
    ExponentTuple,
    LinearFormSystemQ,
    gap_principle_experiment,
    gap_principle_suite,
    infima_estimate,
    primitive_points,
    random_system,
    search_small_points,
)
from digit_complexity_lab.twisted.height import QPower
from digit_complexity_lab.twisted.infima import archimedean_window

DELTA = Fraction(1, 2)
WINDOW_SEED = 5
WINDOW_SYSTEMS = 12
WINDOW_BOX = 12
SUITE_SYSTEMS = 100
SUITE_BOX = 1000


def test_primitive_points() -> None:
    """Primitive points up to sign, by maximum norm."""
    points = primitive_points(2, 1)
    assert points == [(0, 1), (1, -1), (1, 0), (1, 1)]
    assert all(p[0] > 0 or (p[0] == 0 and p[1] > 0) for p in primitive_points(2, 5))


@pytest.mark.parametrize("workers", [1, 2])
def test_search_finds_only_the_axis(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple, workers: int
) -> None:
    """Only ``(1, 0)`` has ``H_16(x) <= 16^(-1/2)``."""
    found = search_small_points(
        identity_system, half_exponents, 16, DELTA, 10, workers=workers
    )
    assert found == [(1, 0)]


@pytest.mark.parametrize("delta", ["1/2", "0", "-1/2"])
def test_window_search_matches_full_box(delta: str) -> None:
    """Restricting to the archimedean window never drops a small point."""
    rng = np.random.default_rng(WINDOW_SEED)
    for _ in range(WINDOW_SYSTEMS):
        system, c = random_system(rng)
        for Q in (17, 40):
            full = search_small_points(system, c, Q, delta, WINDOW_BOX, prune=False)
            assert search_small_points(system, c, Q, delta, WINDOW_BOX) == full


def test_archimedean_window_of_coordinate_forms(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """Without primes the window is ``|x_i| <= Q^(c_i - delta)``."""
    q = QPower(Fraction(16))
    window = archimedean_window(identity_system, half_exponents, q, DELTA)
    assert window.bounds == (Fraction(1), Fraction(1, 16))


def test_infima_product(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """``lambda1 = 1/4`` at ``(1, 0)``, ``lambda2 = 4`` at ``(0, 1)``."""
    estimate = infima_estimate(identity_system, half_exponents, 16, 5)
    assert estimate.first == (1, 0)
    assert estimate.second == (0, 1)
    assert float(estimate.product.real()) == pytest.approx(1)
    assert estimate.product_in_range
    assert estimate.lambda1 <= estimate.lambda2


def test_gap_principle_on_identity(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """All small points over the parameter window share one line."""
    report = gap_principle_experiment(
        identity_system, half_exponents, DELTA, 17, samples=4, box=6
    )
    assert report.passed
    assert report.witness == (1, 0)
    assert report.samples[0] == 17
    assert len(report.samples) == 4


def test_gap_principle_arguments(
    identity_system: LinearFormSystemQ, half_exponents: ExponentTuple
) -> None:
    """``Q0`` must exceed ``4^(1/delta)``; ``n`` must be 2."""
    with pytest.raises(InputError):
        gap_principle_experiment(identity_system, half_exponents, DELTA, 16)
    with pytest.raises(InputError):
        gap_principle_experiment(identity_system, half_exponents, 0, 17)
    with pytest.raises(InputError):
        gap_principle_experiment(
            LinearFormSystemQ.identity(3), ExponentTuple.zero(3), DELTA, 17
        )


@pytest.mark.slow
def test_gap_principle_suite_passes() -> None:
    """Random admissible systems never produce independent small points."""
    reports = gap_principle_suite(seed=11, systems=3, samples=2, box=4)
    assert len(reports) == 3
    assert all(report.passed for report in reports)


@pytest.mark.slow
def test_gap_principle_suite_at_full_scale() -> None:
    """A hundred random systems, searched in the box of radius 1000."""
    reports = gap_principle_suite(seed=23, systems=SUITE_SYSTEMS, box=SUITE_BOX)
    assert len(reports) == SUITE_SYSTEMS
    failures = [r for r in reports if not r.passed]
    assert failures == []
