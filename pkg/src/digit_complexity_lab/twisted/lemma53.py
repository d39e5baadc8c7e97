"""From solutions of a parametric system to small twisted heights.

A solution ``x`` of ``|L_ip(x)|_p <= Psi(x)^(e_ip)`` (``p`` in ``S``) above
the threshold ``max(2H, n^(2n/eps))`` yields, for ``Q = Psi(x)^(1+eps/n)``
and the reduced exponents ``c``, a twisted height ``H_Q(x) <= Q^-delta``
with ``Q >= max(script_H^(1/C(r, n)), n^(2/delta))``.

``lemma53_verify`` handles rational forms exactly. ``corollary52_verify``
handles the two-form system of an algebraic number ``xi`` with the forms
``X1 - xi X2`` and ``X2`` at infinity; its archimedean factor is certified
in interval arithmetic and ``script_H`` is replaced by the Hadamard-type
upper bound, which can only make the parameter check harder.
"""

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.algebraic.heights import height, inhom_height
from digit_complexity_lab.algebraic.numbers import AlgebraicReal
from digit_complexity_lab.arithmetic.rationals import (
    INFINITY,
    Place,
    RationalLike,
    as_rational,
    padic_abs,
    parse_place,
    place_abs,
    support_primes,
)
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    certify,
    current_precision,
    maximum,
)
from digit_complexity_lab.bounds.formulas import cor52_threshold, hadamard_bound
from digit_complexity_lab.bounds.reduction import corollary52_exponents, reduction
from digit_complexity_lab.errors import InputError

from .height import QPower, TwistedHeightValue, compare_with_power, twisted_height
from .systems import ExponentTuple, LinearFormSystemQ

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Lemma53Report:
    """Preconditions that failed, or both conclusions.

    Conclusions stay ``None`` when a precondition fails.
    """

    n: int
    epsilon: Fraction
    delta: Fraction
    psi: Fraction
    Q: QPower
    r: int
    failures: list[str] = field(default_factory=list)
    height: Optional[BigReal] = None
    exact_height: Optional[TwistedHeightValue] = None
    height_ok: Optional[bool] = None
    parameter_ok: Optional[bool] = None

    @property
    def accepted(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> bool:
        return self.accepted and bool(self.height_ok) and bool(self.parameter_ok)


def _power_sign(b1: Fraction, f1: Fraction, b2: Fraction, f2: Fraction) -> int:
    """Sign of ``b1^f1 - b2^f2`` for positive bases, exactly."""
    common = math.lcm(f1.denominator, f2.denominator)
    left = b1 ** int(f1 * common)
    right = b2 ** int(f2 * common)
    return (left > right) - (left < right)


def _integer_vector(x: Sequence[int], n: int) -> list[Fraction]:
    if len(x) != n:
        raise InputError(f"expected an integer vector of length {n}")
    vector = [as_rational(v) for v in x]
    if any(v.denominator != 1 for v in vector):
        raise InputError("solutions must be integer vectors")
    return vector


def _rational_failures(
    x: list[Fraction],
    system: LinearFormSystemQ,
    e: Mapping[Place, Sequence[Fraction]],
    epsilon: Fraction,
    psi: Fraction,
) -> list[str]:
    failures = []
    for place, row in e.items():
        for i, (form, exponent) in enumerate(zip(system.forms_at(place), row), 1):
            if compare_with_power(place_abs(form(x), place), psi, exponent) > 0:
                failures.append(
                    f"system inequality violated: |L_{i},{place}(x)| > "
                    f"Psi^{exponent}"
                )
    H = max(inhom_height(f).lo for place in e for f in system.forms_at(place))
    n = system.n
    if psi <= 2 * H or compare_with_power(psi, Fraction(n), 2 * n / epsilon) <= 0:
        failures.append(
            f"threshold violated: Psi = {psi} is not above max(2H, n^(2n/eps)) "
            f"with H = {H}"
        )
    return failures


def _distinct_over(system: LinearFormSystemQ, places: Sequence[Place]) -> int:
    return len({f.coefficients for p in places for f in system.forms_at(p)})


def lemma53_verify(
    x: Sequence[int],
    system: LinearFormSystemQ,
    e: Mapping[Place, Sequence[RationalLike]],
    psi: RationalLike,
) -> Lemma53Report:
    """Verify both conclusions for a solution of a rational system, exactly.

    Args:
        x: Integer solution vector.
        system: Rational forms; every listed place must carry exponents.
        e: Admissible exponents per place of ``S``; ``epsilon`` is minus
            their sum.
        psi: The value ``Psi(x) > 0``.

    Returns:
        Lemma53Report: With exact twisted height and ``r = n + R`` where
        ``R`` counts the distinct forms over ``S``.

    Raises:
        InputError: For inadmissible exponents or a mismatched system.
    """
    n = system.n
    rows = {parse_place(p): tuple(as_rational(v) for v in row) for p, row in e.items()}
    if not set(system.places) <= set(rows):
        raise InputError("every place with special forms must carry exponents")
    epsilon = -sum((v for row in rows.values() for v in row), Fraction(0))
    reduced = reduction(n, epsilon, rows)
    c = ExponentTuple.from_reduction(n, reduced)
    delta = as_rational(reduced.delta)
    vector = _integer_vector(x, n)
    value = as_rational(psi)
    if value <= 0:
        raise InputError("Psi(x) must be positive")
    scale = 1 + epsilon / n
    q = QPower(value, scale)
    r = n + _distinct_over(system, list(rows))

    failures = _rational_failures(vector, system, rows, epsilon, value)
    if failures:
        logger.info("lemma53_rejected", failures=failures)
        return Lemma53Report(n, epsilon, delta, value, q, r, failures)

    exact = twisted_height(vector, system, c, q)
    height_ok = exact.at_most_power(q, -delta)
    binomial = math.comb(r, n)
    script_H = system.script_H()
    parameter_ok = compare_with_power(
        script_H, value, scale * binomial
    ) <= 0 and _power_sign(value, scale, Fraction(n), 2 / delta) >= 0
    logger.debug(
        "lemma53_verified", height_ok=height_ok, parameter_ok=parameter_ok, r=r
    )
    return Lemma53Report(
        n,
        epsilon,
        delta,
        value,
        q,
        r,
        height=exact.real(),
        exact_height=exact,
        height_ok=height_ok,
        parameter_ok=parameter_ok,
    )


def _archimedean_factor(
    xi: AlgebraicReal, x: list[Fraction], q: BigReal, c: Sequence[Fraction]
) -> BigReal:
    enclosure = xi.enclosure(current_precision())
    first = abs(x[0] - enclosure * x[1]) * q.power(-c[0])
    second = abs(x[1]) * q.power(-c[1])
    return maximum(first, second)


def _finite_factor(
    x: list[Fraction], c: ExponentTuple, q: BigReal, places: Sequence[int]
) -> BigReal:
    """Product over primes of ``max_i |x_i|_p Q^-c_ip``."""
    value = BigReal.exact(1)
    primes = sorted(set(places) | set(support_primes(*[v for v in x if v != 0])))
    for p in primes:
        row = c.at(p)
        value = value * maximum(
            padic_abs(x[0], p) * q.power(-row[0]),
            padic_abs(x[1], p) * q.power(-row[1]),
        )
    return value


def corollary52_verify(
    xi: AlgebraicReal,
    x: Sequence[int],
    f: Mapping[Place, RationalLike],
    s1: Sequence[int] = (),
    s2: Sequence[int] = (),
) -> Lemma53Report:
    """Verify both conclusions for a solution ``x = (x1, x2)`` of the
    approximation system of ``xi`` with ``Psi(x) = |x2|``.

    The system has ``R = 3`` and ``D = deg xi``, so ``r = 2 + 3 deg xi``,
    and ``H(xi)`` bounds the form heights.

    Raises:
        InputError: For inadmissible ``f`` or ``x2 = 0``.
    """
    epsilon, e = corollary52_exponents(f, s1, s2)
    reduced = reduction(2, epsilon, e)
    c = ExponentTuple.from_reduction(2, reduced)
    delta = as_rational(reduced.delta)
    vector = _integer_vector(x, 2)
    if vector[1] == 0:
        raise InputError("Psi(x) = |x2| must be nonzero")
    psi = abs(vector[1])
    scale = 1 + epsilon / 2
    q = QPower(psi, scale)
    r = 2 + 3 * xi.degree
    exponents = {parse_place(p): as_rational(v) for p, v in f.items()}
    finite = [int(p) for p in c.places if p != INFINITY]

    failures = []
    for p in finite:
        coordinate = vector[0] if p in {int(s) for s in s1} else vector[1]
        if compare_with_power(padic_abs(coordinate, p), psi, -exponents[p]) > 0:
            failures.append(f"system inequality violated at p = {p}")

    def archimedean_holds() -> Optional[bool]:
        distance = abs(vector[0] - xi.enclosure(current_precision()) * vector[1])
        return distance.le(BigReal.exact(psi).power(1 - exponents[INFINITY]))

    if not certify(archimedean_holds, check="corollary52_system"):
        failures.append("system inequality violated at infinity")

    def above_threshold() -> Optional[bool]:
        return cor52_threshold(height(xi), epsilon).lt(psi)

    if not certify(above_threshold, check="corollary52_threshold"):
        failures.append(
            f"threshold violated: Psi = {psi} is not above max(2H(xi), 2^(4/eps))"
        )
    if failures:
        logger.info("corollary52_rejected", failures=failures)
        return Lemma53Report(2, epsilon, delta, psi, q, r, failures)

    def small_height() -> Optional[bool]:
        big_q = q.real()
        value = _archimedean_factor(xi, vector, big_q, c.at(INFINITY))
        value = value * _finite_factor(vector, c, big_q, finite)
        return value.le(big_q.power(-delta))

    def large_parameter() -> Optional[bool]:
        bound = hadamard_bound(2, r, height(xi)).power(
            Fraction(1, math.comb(r, 2))
        )
        floor = maximum(bound, BigReal.exact(2).power(2 / delta))
        return floor.le(q.real())

    height_ok = certify(small_height, check="corollary52_height")
    parameter_ok = certify(large_parameter, check="corollary52_parameter")
    big_q = q.real()
    value = _archimedean_factor(xi, vector, big_q, c.at(INFINITY))
    value = value * _finite_factor(vector, c, big_q, finite)
    return Lemma53Report(
        2,
        epsilon,
        delta,
        psi,
        q,
        r,
        height=value,
        height_ok=height_ok,
        parameter_ok=parameter_ok,
    )
