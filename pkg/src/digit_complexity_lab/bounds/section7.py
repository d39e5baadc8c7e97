"""Parameters of the digit-shift approximation argument.

Given the decay rate ``v`` of the approximation exponent and the size
``t_N`` of the largest shift, these functions produce the working epsilon,
the integer ``k``, the subspace count ``A1`` and the bound on ``k0``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    RealLike,
    certify,
    coerce_real,
    log,
)
from digit_complexity_lab.errors import InputError

logger = structlog.get_logger(__name__)

V_LIMIT = Fraction(1, 11)


def solve_eta(v: RealLike) -> BigReal:
    """The root in ``(0, 1)`` of ``(11 + 2 eta)(v + eta) + eta = 1``.

    The equation is the quadratic ``2 eta^2 + (12 + 2v) eta + 11v - 1 = 0``;
    its larger root is positive exactly when ``v < 1/11``.

    Raises:
        InputError: Unless ``0 < v < 1/11``.
    """
    rate = coerce_real(v)
    if rate.lo <= 0 or rate.hi >= V_LIMIT:
        raise InputError("v must lie in (0, 1/11)")
    linear = 12 + 2 * rate
    discriminant = linear * linear - 8 * (11 * rate - 1)
    return (discriminant.sqrt() - linear) / 4


def eta_residual(v: RealLike, eta: RealLike) -> BigReal:
    """``(11 + 2 eta)(v + eta) + eta - 1``, zero at the solution."""
    e = coerce_real(eta)
    return (11 + 2 * e) * (coerce_real(v) + e) + e - 1


@dataclass(frozen=True)
class Section7Params:
    """Derived parameters for one choice of ``(t_N, v, d)``."""

    log_t_N: BigReal
    v: BigReal
    eta: BigReal
    d: int
    epsilon: BigReal
    k: int
    A1_plus: BigReal
    A1_minus: BigReal
    target: BigReal
    kA1_plus_ok: bool
    kA1_minus_ok: bool
    k0_bound: BigReal

    @property
    def kA1_plus(self) -> BigReal:
        return self.k * self.A1_plus

    @property
    def kA1_minus(self) -> BigReal:
        return self.k * self.A1_minus


def _epsilon(log_t_N: BigReal, v: BigReal) -> BigReal:
    return log_t_N.power(-v)


def _k(log_t_N: BigReal, v: BigReal) -> int:
    floor = certify(lambda: (2 / _epsilon(log_t_N, v)).floor(), check="section7_k")
    return floor + 1


def a1_count(epsilon: BigReal, k: int, d: int, sign: int) -> BigReal:
    """``8^144 (1 + (eps - 1/k)^-1)^(7 sign) log(8d) log log(8d)``.

    The displayed count uses exponent ``-7``; the general three-form count
    gives ``+7``. Both are evaluated and callers report both.
    """
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    excess = epsilon - Fraction(1, k)
    if excess.lo <= 0:
        raise InputError("epsilon must exceed 1/k")
    factor = 1 + excess.reciprocal()
    log_8d = log(8 * d)
    return 8**144 * factor ** (7 * sign) * log_8d * log(log_8d)


def section7_params(
    v: RealLike,
    d: int,
    t_N: Optional[RealLike] = None,
    eta: Optional[RealLike] = None,
    log_t_N: Optional[RealLike] = None,
) -> Section7Params:
    """Evaluate the shift-argument parameters.

    Args:
        v: Decay rate in ``(0, 1/11)``.
        d: Degree of the algebraic number, at least 1.
        t_N: Largest shift, at least 3. Give ``log_t_N`` instead for shifts
            too large to write down.
        eta: Defaults to ``solve_eta(v)``.
        log_t_N: Natural logarithm of ``t_N``.

    Returns:
        Section7Params: The parameters and the check ``k A1 <= eps^-(8+eta)``
        for both signs of the ``A1`` exponent.

    Raises:
        InputError: On parameters outside their domains.
    """
    if (t_N is None) == (log_t_N is None):
        raise InputError("give exactly one of t_N and log_t_N")
    if int(d) != d or d < 1:
        raise InputError("d must be a positive integer")
    rate = coerce_real(v)
    if log_t_N is None:
        size = coerce_real(t_N)
        if size.lo < 3:
            raise InputError("t_N must be at least 3")
        log_size = size.log()
    else:
        log_size = coerce_real(log_t_N)
        if log_size.lo <= 1:
            raise InputError("log t_N must exceed 1")
    solved = solve_eta(rate)
    if eta is not None:
        solved = coerce_real(eta)
    epsilon = _epsilon(log_size, rate)
    k = _k(log_size, rate)
    plus = a1_count(epsilon, k, d, 1)
    minus = a1_count(epsilon, k, d, -1)
    target = epsilon.power(-(8 + solved))

    def holds(sign: int) -> Optional[bool]:
        eps = _epsilon(log_size, rate)
        return (k * a1_count(eps, k, d, sign)).le(eps.power(-(8 + solved)))

    plus_ok = certify(lambda: holds(1), check="section7_kA1")
    minus_ok = certify(lambda: holds(-1), check="section7_kA1")
    k0_bound = 4 + log(4 / epsilon) / log(2)
    logger.info(
        "section7_evaluated",
        v=float(rate),
        d=d,
        epsilon=float(epsilon),
        k=k,
        kA1_plus_ok=plus_ok,
        kA1_minus_ok=minus_ok,
    )
    return Section7Params(
        log_t_N=log_size,
        v=rate,
        eta=solved,
        d=int(d),
        epsilon=epsilon,
        k=k,
        A1_plus=plus,
        A1_minus=minus,
        target=target,
        kA1_plus_ok=plus_ok,
        kA1_minus_ok=minus_ok,
        k0_bound=k0_bound,
    )

