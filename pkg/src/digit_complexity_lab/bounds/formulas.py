"""Explicit counts and thresholds from the subspace theorem and its corollaries.

Every ``log`` here follows the evaluation context's log base (natural by
default). Results are ``BigReal`` enclosures; rational parameters enter
exactly.
"""

from digit_complexity_lab.arithmetic.rationals import RationalLike, as_rational
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    RealLike,
    coerce_real,
    iterated_log,
    log,
    maximum,
)
from digit_complexity_lab.errors import InputError

LEMMA81_CONSTANT = 2**37


def _positive(name: str, value: RealLike) -> BigReal:
    real = coerce_real(value)
    if real.lo <= 0:
        raise InputError(f"{name} must be positive")
    return real


def _delta(value: RationalLike) -> BigReal:
    delta = as_rational(value)
    if not 0 < delta <= 1:
        raise InputError("delta must lie in (0, 1]")
    return BigReal.exact(delta)


def _at_least(name: str, value: int, minimum: int) -> int:
    if int(value) != value or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}")
    return int(value)


def _positive_log_log(argument: BigReal, label: str) -> BigReal:
    inner = log(argument)
    if inner.hi <= 1:
        raise InputError(f"log log({label}) is not positive for this argument")
    return log(inner)


def t1(n: int, r: int, delta: RationalLike) -> BigReal:
    """Number of exceptional subspaces in the parametric subspace theorem.

    ``4^((n+8)^2) delta^(-n-4) log(2r) log log(2r)`` for ``n >= 3`` and
    ``2^25 delta^(-3) log(2r) log(delta^(-1) log(2r))`` for ``n = 2``.

    Raises:
        InputError: Unless ``n >= 2``, ``r >= n`` and ``0 < delta <= 1``.
    """
    n = _at_least("n", n, 2)
    r = _at_least("r", r, n)
    d = _delta(delta)
    log_2r = log(2 * r)
    if n == 2:
        return 2**25 * d**-3 * log_2r * log(log_2r / d)
    return 4 ** ((n + 8) ** 2) * d ** (-n - 4) * log_2r * log(log_2r)


def t2(r: int, delta: RationalLike) -> BigReal:
    """The two-dimensional count, ``t1`` with ``n = 2``."""
    return t1(2, r, delta)


def theorem51_count(n: int, R: int, D: int, epsilon: RationalLike) -> BigReal:
    """Bound on the number of subspaces containing the large solutions of a system.

    Raises:
        InputError: Unless ``n >= 2``, ``R >= 1``, ``D >= 1`` and
            ``epsilon > 0``.
    """
    n = _at_least("n", n, 2)
    R = _at_least("R", R, 1)
    D = _at_least("D", D, 1)
    eps = _positive("epsilon", as_rational(epsilon))
    factor = 1 + eps.reciprocal()
    log_2rd = log(2 * R * D)
    if n == 2:
        return 2**32 * factor**3 * log_2rd * log(factor * log_2rd)
    return (
        8 ** ((n + 9) ** 2)
        * factor ** (n + 4)
        * log_2rd
        * _positive_log_log(BigReal.exact(2 * R * D), "2RD")
    )


def theorem51_threshold(n: int, H: RealLike, epsilon: RationalLike) -> BigReal:
    """``max(2H, n^(2n/epsilon))``: solutions below it are not counted."""
    n = _at_least("n", n, 2)
    height = coerce_real(H)
    if height.lo < 1:
        raise InputError("H must be at least 1")
    eps = as_rational(epsilon)
    if eps <= 0:
        raise InputError("epsilon must be positive")
    return maximum(2 * height, BigReal.exact(n).power(as_rational(2 * n) / eps))


def cor52_count(d: int, epsilon: RationalLike) -> BigReal:
    """``2^32 (1+1/eps)^3 log(6d) log((1+1/eps) log(6d))``."""
    d = _at_least("d", d, 1)
    eps = _positive("epsilon", as_rational(epsilon))
    factor = 1 + eps.reciprocal()
    log_6d = log(6 * d)
    return 2**32 * factor**3 * log_6d * log(factor * log_6d)


def cor52_threshold(H_xi: RealLike, epsilon: RationalLike) -> BigReal:
    """``max(2 H(xi), 2^(4/eps))``."""
    height = coerce_real(H_xi)
    if height.lo < 1:
        raise InputError("H(xi) must be at least 1")
    eps = as_rational(epsilon)
    if eps <= 0:
        raise InputError("epsilon must be positive")
    return maximum(2 * height, BigReal.exact(2).power(4 / eps))


def B_of(d: int, epsilon: RationalLike) -> BigReal:
    """``2^32 (1+2/eps)^3 log(6d) log((1+2/eps) log(6d))``."""
    d = _at_least("d", d, 1)
    eps = _positive("epsilon", as_rational(epsilon))
    factor = 1 + 2 / eps
    log_6d = log(6 * d)
    return 2**32 * factor**3 * log_6d * log(factor * log_6d)


def lemma81_count(d: int, epsilon: RationalLike) -> BigReal:
    """``2^37 log(6d) eps^(-3) log(eps^(-1) log(6d))`` for ``0 < eps <= 1``.

    With the natural logarithm this dominates ``cor52_count(d, eps)`` on the
    whole range, which makes it an explicit sufficient constant for the
    count of large run-length jumps; it is not claimed to be optimal.
    """
    d = _at_least("d", d, 1)
    eps = as_rational(epsilon)
    if not 0 < eps <= 1:
        raise InputError("epsilon must lie in (0, 1]")
    log_6d = log(6 * d)
    eps_cubed = BigReal.exact(eps**3)
    return LEMMA81_CONSTANT * log_6d / eps_cubed * log(log_6d / eps)


def theorem31_threshold(n: int, d: int, c1: RealLike = 1) -> BigReal:
    """``c1 (log n)^(3/2) (log log n)^(-1/2) (log 6d)^(-1/2)``.

    ``c1`` is not known explicitly; experiments fit it from data.

    Raises:
        InputError: If ``log log n`` is not positive.
    """
    d = _at_least("d", d, 1)
    log_n = log(_at_least("n", n, 3))
    log_log_n = _positive_log_log(BigReal.exact(n), "n")
    return (
        coerce_real(c1)
        * log_n.power(as_rational("3/2"))
        / log_log_n.sqrt()
        / log(6 * d).sqrt()
    )


def hadamard_bound(n: int, r: int, H: RealLike) -> BigReal:
    """``n^(n/2) H^r``, the Hadamard-type upper bound for the system height."""
    n = _at_least("n", n, 2)
    r = _at_least("r", r, n)
    height = coerce_real(H)
    if height.lo < 1:
        raise InputError("H must be at least 1")
    return BigReal.exact(n).power(as_rational(n) / 2) * height**r


def cugiani_epsilon(m: int, c: RealLike, y: RealLike) -> BigReal:
    """``c (log_(m+1) y)^(-1/3) log_(m+2) y`` with ``m``-fold iterated logs.

    Iterated logarithms are natural and clamp to 1 below ``exp_m(1)``.
    """
    m = _at_least("m", m, 1)
    size = coerce_real(y)
    if size.lo <= 0:
        raise InputError("y must be positive")
    slower = iterated_log(m + 1, size)
    return coerce_real(c) * iterated_log(m + 2, size) / slower.root(3)
