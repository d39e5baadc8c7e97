"""Hypothesis checking for Roth's Lemma on multihomogeneous polynomials.

For ``0 < theta <= 1``, ``m >= 2`` and a polynomial ``P`` of degree ``r``
the lemma asks for two things:

* degree ratios: ``r_h / r_(h+1) >= 2 m^2 / theta`` for every ``h < m``;
* point heights: ``H_2(x_h)^(r_h) >= (e^q H_2(P))^((3 m^2/theta)^m)`` for
  every ``h``, where ``q = r_1 + ... + r_m``.

When both hold the index of ``P`` at the points is below ``m theta``. The
point-height comparison is made on logarithms and certified.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.algebraic.heights import euclidean_height
from digit_complexity_lab.arithmetic.rationals import RationalLike, as_rational
from digit_complexity_lab.arithmetic.reals import BigReal, certify, ln
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.metrics import get_lab_metrics

from .index import MultiHomPolynomial, index

logger = structlog.get_logger(__name__)


def polynomial_height(P: MultiHomPolynomial) -> BigReal:
    """``H_2(P)``, the Euclidean height of the coefficient vector."""
    if P.is_zero:
        raise InputError("the zero polynomial has no height")
    return euclidean_height(list(P.coefficients.values()))


@dataclass(frozen=True)
class RothReport:
    """Outcome of ``roth_lemma_check``.

    ``index`` and ``conclusion_holds`` stay ``None`` unless both hypotheses
    hold. ``messages`` names every violated condition.
    """

    m: int
    theta: Fraction
    degrees: tuple[int, ...]
    ratio_violations: list[int] = field(default_factory=list)
    height_violations: list[int] = field(default_factory=list)
    index: Optional[Fraction] = None
    conclusion_holds: Optional[bool] = None
    messages: list[str] = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return not self.ratio_violations and not self.height_violations

    @property
    def passed(self) -> bool:
        """False only for a counterexample candidate."""
        return self.conclusion_holds is not False


def _ratio_violations(degrees: Sequence[int], bound: Fraction) -> list[int]:
    return [
        h
        for h in range(1, len(degrees))
        if Fraction(degrees[h - 1], degrees[h]) < bound
    ]


def _height_holds(
    r_h: int, point: Sequence[Fraction], P: MultiHomPolynomial, power: Fraction
) -> bool:
    q = sum(P.degrees)

    def decide() -> Optional[bool]:
        left = r_h * ln(euclidean_height(point))
        right = power * (q + ln(polynomial_height(P)))
        return right.le(left)

    return certify(decide, check="roth_point_height")


def roth_lemma_check(
    P: MultiHomPolynomial,
    degrees: Sequence[int],
    points: Sequence[Sequence[RationalLike]],
    theta: RationalLike,
) -> RothReport:
    """Check both hypotheses and, when they hold, the index conclusion.

    Args:
        P: Nonzero polynomial, multihomogeneous of degree ``degrees``.
        degrees: The tuple ``r``.
        points: ``m`` nonzero rational pairs.
        theta: Parameter in ``(0, 1]``.

    Returns:
        RothReport: Violated conditions by name, or the computed index.

    Raises:
        InputError: For ``m < 2``, ``theta`` outside ``(0, 1]`` or a
            polynomial of another degree.
    """
    r = tuple(degrees)
    m = len(r)
    if m < 2:
        raise InputError("Roth's Lemma needs m >= 2")
    t = as_rational(theta)
    if not 0 < t <= 1:
        raise InputError("theta must lie in (0, 1]")
    if P.degrees != r:
        raise InputError(f"P has degree {P.degrees}, expected {r}")
    if P.is_zero:
        raise InputError("P must be nonzero")
    if len(points) != m:
        raise InputError(f"expected {m} points")
    vectors = [[as_rational(v) for v in point] for point in points]

    messages = []
    ratio_bound = 2 * m * m / t
    ratio_violations = _ratio_violations(r, ratio_bound)
    for h in ratio_violations:
        messages.append(
            f"degree-ratio hypothesis violated: r_{h}/r_{h + 1} = "
            f"{Fraction(r[h - 1], r[h])} < {ratio_bound}"
        )
    power = (3 * m * m / t) ** m
    height_violations = [
        h
        for h, (r_h, point) in enumerate(zip(r, vectors), start=1)
        if not _height_holds(r_h, point, P, power)
    ]
    for h in height_violations:
        messages.append(f"point-height hypothesis violated for x_{h}")

    if ratio_violations or height_violations:
        logger.info("roth_hypotheses_failed", messages=messages)
        return RothReport(
            m, t, r, ratio_violations, height_violations, messages=messages
        )

    value = index(P, vectors, r)
    holds = value < m * t
    if not holds:
        get_lab_metrics().certification_failures.labels(check="roth_index").inc()
        logger.error("roth_conclusion_failed", index=str(value), bound=str(m * t))
        messages.append(f"index {value} is not below m*theta = {m * t}")
    return RothReport(m, t, r, [], [], value, holds, messages)
