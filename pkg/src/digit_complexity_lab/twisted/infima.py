"""Small points of twisted heights, the gap principle and successive infima.

Searches run over the primitive integer vectors of a box, taken up to sign:
the first nonzero coordinate is positive. Boxes split by the first
coordinate into disjoint slices that may run in worker processes; results
are merged in sorted order. In dimension 2 each slice only visits the
second coordinates allowed by the archimedean window of the height bound.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np
import structlog

from digit_complexity_lab.arithmetic.rationals import (
    INFINITY,
    RationalLike,
    as_rational,
    place_abs,
)
from digit_complexity_lab.arithmetic.reals import BigReal
from digit_complexity_lab.errors import InputError

from .height import QPower, TwistedHeightValue, compare_with_power, twisted_height
from .systems import ExponentTuple, LinearFormSystemQ, random_system

logger = structlog.get_logger(__name__)

Point = tuple[int, ...]

DEFAULT_SAMPLES = 8
SLICES_PER_WORKER = 4


def _canonical(point: Point) -> bool:
    leading = next((v for v in point if v != 0), 0)
    return leading > 0 and math.gcd(*point) == 1


def _box_slice(n: int, box: int, first: range) -> list[Point]:
    tail = range(-box, box + 1)
    return [
        point
        for a in first
        for rest in itertools.product(tail, repeat=n - 1)
        if _canonical(point := (a, *rest))
    ]


def primitive_points(n: int, box: int) -> list[Point]:
    """Primitive vectors with coordinates in ``[-box, box]``, up to sign."""
    if box < 1:
        raise InputError("the box must be at least 1")
    return sorted(_box_slice(n, box, range(box + 1)), key=_point_order)


def _point_order(point: Point) -> tuple[int, Point]:
    return max(abs(v) for v in point), point


@dataclass(frozen=True)
class ArchimedeanWindow:
    """Bounds ``|L_i,inf(x)| <= bounds[i]`` met by every small primitive point."""

    rows: tuple[tuple[Fraction, ...], ...]
    bounds: tuple[Fraction, ...]


def _inverse_norm(rows: tuple[tuple[Fraction, ...], ...], prime: int) -> Fraction:
    """``max |m'_ij|_p`` over the inverse of a determinant-1 2x2 matrix."""
    (a, b), (c, d) = rows
    return max(place_abs(v, prime) for v in (d, -b, -c, a))


def archimedean_window(
    system: LinearFormSystemQ, c: ExponentTuple, q: QPower, delta: Fraction
) -> ArchimedeanWindow:
    """Window of ``H_Q(x) <= Q^-delta`` at the archimedean place, for ``n = 2``.

    A primitive integer ``x`` has ``max_j |x_j|_p = 1`` at every prime, and
    ``max_j |x_j|_p <= N_p max_i |L_ip(x)|_p`` with ``N_p`` the largest
    ``p``-adic entry of the inverse forms. Each prime factor of the height is
    therefore at least ``Q^-max_i c_ip / N_p``, which leaves
    ``|L_i,inf(x)| <= Q^(c_i,inf - delta + sum_p max_i c_ip) prod_p N_p``.
    """
    primes = {int(p) for p in [*system.places, *c.places] if p != INFINITY}
    scale = Fraction(1)
    slack = Fraction(0)
    for prime in primes:
        rows = tuple(form.coefficients for form in system.forms_at(prime))
        scale *= _inverse_norm(rows, prime)
        slack += max(c.at(prime))
    bounds = tuple(
        scale * BigReal.exact(q.base).power(q.power_exponent(ci - delta + slack)).hi
        for ci in c.at(INFINITY)
    )
    rows = tuple(form.coefficients for form in system.forms_at(INFINITY))
    return ArchimedeanWindow(rows, bounds)


def _window_slice(window: ArchimedeanWindow, box: int, first: range) -> list[Point]:
    points = []
    for x1 in first:
        lo, hi = -box, box
        for (a, b), bound in zip(window.rows, window.bounds):
            if b == 0:
                if abs(a * x1) > bound:
                    hi = lo - 1
                continue
            ends = sorted(((-bound - a * x1) / b, (bound - a * x1) / b))
            lo, hi = max(lo, math.ceil(ends[0])), min(hi, math.floor(ends[1]))
        points.extend(
            point for x2 in range(lo, hi + 1) if _canonical(point := (x1, x2))
        )
    return points


@dataclass(frozen=True)
class _SearchTask:
    system: LinearFormSystemQ
    c: ExponentTuple
    q: QPower
    delta: Fraction
    box: int
    first: range
    window: Optional[ArchimedeanWindow] = None


def _search_slice(task: _SearchTask) -> list[Point]:
    if task.window is None:
        candidates = _box_slice(task.system.n, task.box, task.first)
    else:
        candidates = _window_slice(task.window, task.box, task.first)
    return [
        point
        for point in candidates
        if twisted_height(point, task.system, task.c, task.q).at_most_power(
            task.q, -task.delta
        )
    ]


def search_small_points(
    system: LinearFormSystemQ,
    c: ExponentTuple,
    Q: Union[QPower, RationalLike],
    delta: RationalLike,
    box: int,
    workers: int = 1,
    prune: bool = True,
) -> list[Point]:
    """Primitive integer vectors in the box with ``H_Q(x) <= Q^-delta``.

    Args:
        system: Linear forms.
        c: Exponents.
        Q: Parameter ``Q >= 1``.
        delta: Exponent of the bound.
        box: Largest absolute coordinate, at least 1.
        workers: Worker processes.
        prune: Restrict ``n = 2`` searches to the archimedean window; the
            result is the same, only fewer candidates are tested.

    Returns:
        list[Point]: The points ordered by maximum norm, then lexicographically.
    """
    if box < 1:
        raise InputError("the box must be at least 1")
    if workers < 1:
        raise InputError("workers must be at least 1")
    q = QPower.of(Q)
    d = as_rational(delta)
    window = archimedean_window(system, c, q, d) if prune and system.n == 2 else None
    pieces = 1 if workers == 1 else workers * SLICES_PER_WORKER
    step = -(-(box + 1) // pieces)
    tasks = [
        _SearchTask(
            system, c, q, d, box, range(start, min(start + step, box + 1)), window
        )
        for start in range(0, box + 1, step)
    ]
    if workers == 1:
        slices = [_search_slice(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            slices = list(executor.map(_search_slice, tasks))
    found = sorted((p for part in slices for p in part), key=_point_order)
    logger.debug("small_points_found", box=box, found=len(found))
    return found


def _independent(a: Point, b: Point) -> bool:
    return a[0] * b[1] - a[1] * b[0] != 0


@dataclass(frozen=True)
class GapPrincipleReport:
    """Small points found at sampled ``Q`` and whether they share one line."""

    delta: Fraction
    Q0: Fraction
    samples: list[Fraction]
    points: list[tuple[Fraction, Point]] = field(default_factory=list)
    witness: Optional[Point] = None
    counterexample: Optional[tuple[Point, Point]] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def sample_parameters(Q0: Fraction, delta: Fraction, samples: int) -> list[Fraction]:
    """Evenly spaced rationals in ``[Q0, Q0^(1 + delta/2))``."""
    upper = BigReal.exact(Q0).power(1 + delta / 2).lo
    if math.floor(upper) > Q0:
        upper = Fraction(math.floor(upper))
    return [Q0 + (upper - Q0) * j / samples for j in range(samples)]


def gap_principle_experiment(
    system: LinearFormSystemQ,
    c: ExponentTuple,
    delta: RationalLike,
    Q0: RationalLike,
    samples: int = DEFAULT_SAMPLES,
    box: int = 10,
    workers: int = 1,
) -> GapPrincipleReport:
    """Collect small points for ``Q`` in ``[Q0, Q0^(1+delta/2))`` and test collinearity.

    All points with ``H_Q(x) <= Q^-delta`` for such ``Q`` lie on one line
    when ``Q0 > 4^(1/delta)``; a pair of independent points is reported as
    a counterexample.

    Raises:
        InputError: Unless ``n = 2``, ``0 < delta <= 1`` and ``Q0 > 4^(1/delta)``.
    """
    if system.n != 2:
        raise InputError("the gap principle experiment needs n = 2")
    d = as_rational(delta)
    if not 0 < d <= 1:
        raise InputError("delta must lie in (0, 1]")
    start = as_rational(Q0)
    if compare_with_power(start, Fraction(4), 1 / d) <= 0:
        raise InputError("Q0 must exceed 4^(1/delta)")
    if samples < 1:
        raise InputError("samples must be at least 1")
    grid = sample_parameters(start, d, samples)
    points = [
        (q, point)
        for q in grid
        for point in search_small_points(system, c, q, d, box, workers)
    ]
    witness = points[0][1] if points else None
    counterexample = next(
        ((witness, p) for _, p in points if witness and _independent(witness, p)),
        None,
    )
    report = GapPrincipleReport(d, start, grid, points, witness, counterexample)
    if counterexample is not None:
        logger.error(
            "gap_principle_counterexample",
            first=counterexample[0],
            second=counterexample[1],
        )
    return report


def gap_principle_suite(
    seed: int,
    systems: int = 100,
    delta: RationalLike = Fraction(1, 2),
    Q0: RationalLike = 17,
    samples: int = 4,
    box: int = 6,
) -> list[GapPrincipleReport]:
    """Run the experiment on random determinant-1 systems with admissible exponents."""
    rng = np.random.default_rng(seed)
    reports = []
    for _ in range(systems):
        system, c = random_system(rng)
        reports.append(gap_principle_experiment(system, c, delta, Q0, samples, box))
    failed = sum(not r.passed for r in reports)
    logger.info("gap_principle_suite_finished", systems=systems, failed=failed)
    return reports


@dataclass(frozen=True)
class InfimaEstimate:
    """Upper estimates of the two successive infima over the box."""

    lambda1: TwistedHeightValue
    lambda2: TwistedHeightValue
    first: Point
    second: Point

    @property
    def product(self) -> TwistedHeightValue:
        return self.lambda1 * self.lambda2

    @property
    def product_in_range(self) -> bool:
        """Diagnostic ``1/2 <= lambda1 lambda2 <= 2`` on the estimates."""
        value = self.product
        half = TwistedHeightValue(Fraction(1, 2), Fraction(0), value.base)
        two = TwistedHeightValue(Fraction(2), Fraction(0), value.base)
        return half <= value <= two


def infima_estimate(
    system: LinearFormSystemQ,
    c: ExponentTuple,
    Q: Union[QPower, RationalLike],
    box: int,
) -> InfimaEstimate:
    """Smallest heights of two independent primitive points in the box.

    The infima over the algebraic closure can only be smaller, so both
    values are upper bounds.

    Raises:
        InputError: Unless ``n = 2`` and the box holds two independent points.
    """
    if system.n != 2:
        raise InputError("successive infima are estimated for n = 2 only")
    q = QPower.of(Q)
    heights = [(twisted_height(p, system, c, q), p) for p in primitive_points(2, box)]
    lambda1, first = min(heights, key=lambda item: item[0])
    candidates = [item for item in heights if _independent(first, item[1])]
    if not candidates:
        raise InputError("the box holds no two independent points")
    lambda2, second = min(candidates, key=lambda item: item[0])
    return InfimaEstimate(lambda1, lambda2, first, second)
