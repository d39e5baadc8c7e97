"""Reduction of a subspace-theorem exponent system to parametric form.

An exponent system ``e`` assigns ``n`` exponents to each place in a finite
set ``S``. It is admissible when archimedean exponents are at most 1, finite
ones at most 0, and all of them sum to ``-epsilon``. The reduction returns
``delta = epsilon / (n + epsilon)`` and the centred, rescaled exponents
``c_iv = (e_iv - mean_j e_jv) / (1 + epsilon/n)``, which sum to zero and
whose column maxima sum to at most 1.

Exponents are exact rationals wherever possible. Systems built from
logarithms of integers carry ``BigReal`` enclosures; their equalities are
then checked by containment and their inequalities fail only when a
violation is certified.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import structlog
import sympy

from digit_complexity_lab.arithmetic.rationals import (
    INFINITY,
    Place,
    RationalLike,
    as_rational,
    parse_place,
)
from digit_complexity_lab.arithmetic.reals import BigReal, RealLike, coerce_real, ln
from digit_complexity_lab.errors import InputError

logger = structlog.get_logger(__name__)

ExponentValue = Union[Fraction, BigReal]
ExponentMap = dict[Place, tuple[ExponentValue, ...]]


@dataclass(frozen=True)
class Reduction:
    """Result of ``reduction``.

    Attributes:
        delta: ``epsilon / (n + epsilon)``.
        c: Reduced exponents per place.
        total: ``sum_v sum_i c_iv`` (zero, or an enclosure of zero).
        column_max_sum: ``sum_v max_i c_iv`` (at most 1).
        exact: Whether every value is an exact rational.
    """

    delta: ExponentValue
    c: ExponentMap
    total: ExponentValue
    column_max_sum: ExponentValue
    exact: bool


def _normalize(value: Union[RationalLike, BigReal]) -> ExponentValue:
    if isinstance(value, BigReal):
        return value.lo if value.is_exact else value
    return as_rational(value)


def _add(values: Sequence[ExponentValue]) -> ExponentValue:
    total: ExponentValue = Fraction(0)
    for v in values:
        total = total + v
    if isinstance(total, Fraction):
        return total
    return total.lo if total.is_exact else total


def _maximum(values: Sequence[ExponentValue]) -> ExponentValue:
    if all(isinstance(v, Fraction) for v in values):
        return max(values)
    reals = [coerce_real(v) for v in values]
    return BigReal(
        max(r.lo for r in reals),
        max(r.hi for r in reals),
        min(r.precision for r in reals),
    )


def _equals(value: ExponentValue, target: ExponentValue) -> bool:
    if isinstance(value, Fraction) and isinstance(target, Fraction):
        return value == target
    difference = coerce_real(value) - coerce_real(target)
    return difference.contains(0)


def _exceeds(value: ExponentValue, bound: ExponentValue) -> bool:
    """True only for a certified ``value > bound``."""
    if isinstance(value, Fraction) and isinstance(bound, Fraction):
        return value > bound
    return coerce_real(value).le(coerce_real(bound)) is False


def _negate(value: ExponentValue) -> ExponentValue:
    return -value


def check_exponents(
    n: int, epsilon: Union[RationalLike, BigReal], e: Mapping[Place, Sequence]
) -> ExponentMap:
    """Validate an exponent system and normalize its places and values.

    Raises:
        InputError: Naming the first violated condition.
    """
    if n < 2:
        raise InputError("n must be at least 2")
    eps = _normalize(epsilon)
    if _exceeds(Fraction(0), eps) or (isinstance(eps, Fraction) and eps == 0):
        raise InputError("epsilon must be positive")
    if INFINITY not in {parse_place(p) for p in e}:
        raise InputError("the archimedean place must carry exponents")
    normalized: ExponentMap = {}
    for place, values in e.items():
        key = parse_place(place)
        row = tuple(_normalize(v) for v in values)
        if len(row) != n:
            raise InputError(
                f"place {key} carries {len(row)} exponents, expected {n}"
            )
        bound = Fraction(1) if key == INFINITY else Fraction(0)
        for i, value in enumerate(row, start=1):
            if _exceeds(value, bound):
                raise InputError(
                    f"exponent e_{i},{key} = {value!r} exceeds {bound} at place {key}"
                )
        normalized[key] = row
    total = _add([v for row in normalized.values() for v in row])
    if not _equals(total, _negate(eps)):
        raise InputError(f"exponents sum to {total!r}, expected -epsilon = {-eps!r}")
    return normalized


def reduction(
    n: int, epsilon: Union[RationalLike, BigReal], e: Mapping[Place, Sequence]
) -> Reduction:
    """Compute ``delta`` and the reduced exponents ``c``, checking both ends.

    Args:
        n: Number of forms per place.
        epsilon: Positive exponent excess.
        e: Exponents per place, ``n`` values each.

    Returns:
        Reduction: ``delta``, ``c`` and the two checked sums.

    Raises:
        InputError: If ``e`` is not admissible.
    """
    rows = check_exponents(n, epsilon, e)
    eps = _normalize(epsilon)
    scale = 1 + eps / n
    delta = _normalize(eps / (n + eps))
    c: ExponentMap = {}
    for place, row in rows.items():
        mean = _add(list(row)) / n
        c[place] = tuple(_normalize((v - mean) / scale) for v in row)
    total = _add([v for row in c.values() for v in row])
    column_max_sum = _add([_maximum(row) for row in c.values()])
    if not _equals(total, Fraction(0)):
        raise InputError(f"reduced exponents sum to {total!r}, not 0")
    if _exceeds(column_max_sum, Fraction(1)):
        raise InputError(f"reduced column maxima sum to {column_max_sum!r} > 1")
    exact = isinstance(delta, Fraction) and all(
        isinstance(v, Fraction) for row in c.values() for v in row
    )
    logger.debug("exponents_reduced", n=n, places=len(c), exact=exact)
    return Reduction(delta, c, total, column_max_sum, exact)


def corollary52_exponents(
    f: Mapping[Place, RationalLike],
    s1: Sequence[int] = (),
    s2: Sequence[int] = (),
) -> tuple[Fraction, ExponentMap]:
    """Exponent system for approximation by rationals ``x/y`` at several places.

    The archimedean forms are ``X1 - xi X2`` and ``X2``; a prime in ``s1``
    constrains the numerator and a prime in ``s2`` the denominator.

    Args:
        f: Non-negative exponents keyed by ``"inf"`` and the primes of
            ``s1`` and ``s2``; they must sum to more than 2.
        s1: Primes constraining ``x``.
        s2: Primes constraining ``y``.

    Returns:
        tuple[Fraction, ExponentMap]: ``epsilon = sum f - 2`` and ``e``.

    Raises:
        InputError: On overlapping prime sets, missing or negative ``f`` or a
            sum not above 2.
    """
    primes1 = [parse_place(p) for p in s1]
    primes2 = [parse_place(p) for p in s2]
    if set(primes1) & set(primes2):
        raise InputError("s1 and s2 must be disjoint")
    exponents = {parse_place(p): as_rational(v) for p, v in f.items()}
    expected = {INFINITY, *primes1, *primes2}
    if set(exponents) != expected:
        places = ", ".join(sorted(map(str, expected)))
        raise InputError(f"f must be given exactly at the places {places}")
    if any(v < 0 for v in exponents.values()):
        raise InputError("f exponents must be non-negative")
    epsilon = sum(exponents.values(), Fraction(0)) - 2
    if epsilon <= 0:
        raise InputError("f exponents must sum to more than 2")
    e: ExponentMap = {INFINITY: (1 - exponents[INFINITY], Fraction(1))}
    for p in primes1:
        e[p] = (-exponents[p], Fraction(0))
    for p in primes2:
        e[p] = (Fraction(0), -exponents[p])
    return epsilon, e


def log_ratio(p: int, b: int) -> ExponentValue:
    """``-log|b|_p / log b``, the share of ``log b`` carried by the prime ``p``.

    Exact when ``b`` is a power of ``p``.
    """
    valuation = int(sympy.multiplicity(p, b))
    if valuation == 0:
        return Fraction(0)
    if len(sympy.primefactors(b)) == 1:
        return Fraction(1)
    return valuation * ln(p) / ln(b)


def section7_exponents(
    b: int, k: int, ell: int, epsilon: RealLike
) -> tuple[ExponentValue, ExponentMap]:
    """Three-form exponent system for the approximation of ``b^t x - b^r x``.

    The archimedean exponents are ``(1, (ell+1)/k, -epsilon)`` and every
    prime ``p | b`` carries ``(w_p, w_p ell/k, 0)`` with
    ``w_p = log|b|_p / log b``. The total is ``-(epsilon - 1/k)``.

    Returns:
        tuple: The effective excess ``epsilon - 1/k`` and the system.

    Raises:
        InputError: Unless ``b >= 2``, ``0 <= ell < k`` and ``epsilon > 1/k``.
    """
    if b < 2:
        raise InputError("base must be at least 2")
    if not 0 <= ell < k:
        raise InputError("ell must satisfy 0 <= ell < k")
    eps = _normalize(epsilon)
    excess = _normalize(eps - Fraction(1, k))
    if not _exceeds(excess, Fraction(0)):
        raise InputError("epsilon must exceed 1/k")
    e: ExponentMap = {INFINITY: (Fraction(1), Fraction(ell + 1, k), _negate(eps))}
    for p in sorted(int(q) for q in sympy.primefactors(b)):
        w = _negate(log_ratio(p, b))
        e[p] = (w, _normalize(w * Fraction(ell, k)), Fraction(0))
    return excess, e
