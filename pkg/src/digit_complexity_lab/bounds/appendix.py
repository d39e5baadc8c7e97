"""Constants of the two-dimensional parametric subspace theorem.

``log_C`` stands in for the constant ``C`` itself: its exponent alone has
hundreds of thousands of digits for the smallest admissible parameters.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.arithmetic.rationals import RationalLike, as_rational
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    RealLike,
    certify,
    coerce_real,
    log,
)
from digit_complexity_lab.errors import InputError

from .formulas import t2

logger = structlog.get_logger(__name__)


def _check(r: int, delta: RationalLike, script_h: RealLike) -> tuple[Fraction, BigReal]:
    if int(r) != r or r < 2:
        raise InputError("r must be an integer >= 2")
    d = as_rational(delta)
    if not 0 < d <= 1:
        raise InputError("delta must lie in (0, 1]")
    h = coerce_real(script_h)
    if h.lo < 1:
        raise InputError("the system height must be at least 1")
    return d, h


def m_of(r: int, delta: RationalLike) -> int:
    """``1 + [25600 delta^-2 log(2r)]``."""
    d, _ = _check(r, delta, 1)
    return 1 + certify(
        lambda: (25600 / BigReal.exact(d * d) * log(2 * r)).floor(), check="appendix_m"
    )


def log_C(
    r: int, delta: RationalLike, script_h: RealLike, m: Optional[int] = None
) -> BigReal:
    """``log C = m (240 m^2/delta)^m 3 binom(r, 2) / delta * log(36 H)``."""
    d, h = _check(r, delta, script_h)
    m = m_of(r, d) if m is None else m
    exponent = m * (240 * m * m / d) ** m * 3 * math.comb(r, 2) / d
    return exponent * log(36 * h)


def log_C_prime(r: int, delta: RationalLike, script_h: RealLike) -> BigReal:
    """``log max(H^(1/binom(r, 2)), 4^(1/delta))``."""
    d, h = _check(r, delta, script_h)
    first = log(h) / math.comb(r, 2)
    second = log(4) / d
    return BigReal(max(first.lo, second.lo), max(first.hi, second.hi), first.precision)


def t3(A: RealLike, B: RealLike, delta: RationalLike) -> BigReal:
    """Number of gap-principle windows needed to cover ``[A, B]``.

    ``1 + log(log B / log A) / log(1 + delta/2)``.

    Raises:
        InputError: Unless ``4^(1/delta) < A < B``.
    """
    d = as_rational(delta)
    if not 0 < d <= 1:
        raise InputError("delta must lie in (0, 1]")
    low, high = coerce_real(A), coerce_real(B)
    floor = BigReal.exact(4).power(1 / d)
    if not certify(lambda: floor.lt(low), check="appendix_t3_lower"):
        raise InputError("A must exceed 4^(1/delta)")
    if not certify(lambda: low.lt(high), check="appendix_t3_order"):
        raise InputError("A must be smaller than B")
    return 1 + log(log(high) / log(low)) / log(1 + d / 2)


def t4(m: int, delta: RationalLike) -> BigReal:
    """``(m - 1)(1 + log(162 m^2/delta) / log(1 + delta/2))``."""
    d = as_rational(delta)
    if not 0 < d <= 1:
        raise InputError("delta must lie in (0, 1]")
    if m < 1:
        raise InputError("m must be positive")
    return (m - 1) * (1 + log(162 * m * m / d) / log(1 + d / 2))


def t5(
    r: int, delta: RationalLike, script_h: RealLike, m: Optional[int] = None
) -> BigReal:
    """``1 + log(log C / log C') / log(1 + delta/2)``."""
    d, h = _check(r, delta, script_h)
    ratio = log_C(r, d, h, m) / log_C_prime(r, d, h)
    return 1 + log(ratio) / log(1 + d / 2)


@dataclass(frozen=True)
class AppendixConstants:
    r: int
    delta: Fraction
    script_h: BigReal
    m: int
    log_C: BigReal
    log_C_prime: BigReal
    t2: BigReal
    t4: BigReal
    t5: BigReal
    t3: Optional[BigReal] = None


def appendix_constants(
    r: int,
    delta: RationalLike,
    script_h: RealLike,
    A: Optional[RealLike] = None,
    B: Optional[RealLike] = None,
) -> AppendixConstants:
    """Evaluate every constant for one ``(r, delta, H)``; ``t3`` needs ``A, B``.

    Args:
        r: Number of distinct forms, at least 2.
        delta: In ``(0, 1]``.
        script_h: Height of the form system, at least 1.
        A: Lower end of the window range for ``t3``.
        B: Upper end of the window range for ``t3``.

    Returns:
        AppendixConstants: All constants, ``C`` by its logarithm.
    """
    d, h = _check(r, delta, script_h)
    m = m_of(r, d)
    constants = AppendixConstants(
        r=r,
        delta=d,
        script_h=h,
        m=m,
        log_C=log_C(r, d, h, m),
        log_C_prime=log_C_prime(r, d, h),
        t2=t2(r, d),
        t4=t4(m, d),
        t5=t5(r, d, h, m),
        t3=t3(A, B, d) if A is not None and B is not None else None,
    )
    logger.info("appendix_constants_evaluated", r=r, delta=str(d), m=m)
    return constants
