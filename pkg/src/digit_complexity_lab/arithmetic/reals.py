"""Certified real arithmetic.

A ``BigReal`` is a closed interval with exact rational endpoints. Rational
operations are carried out exactly on the endpoints; transcendental
functions are evaluated with mpmath's interval context at the working
precision of the active ``eval_context`` and the resulting endpoints are
read back as exact dyadic rationals.

Precision counts significant bits: an enclosure produced at ``p`` bits has
width at most ``2^-p * max(1, |x|)``. Comparisons that overlap at the
current precision report ``None``; ``certify`` reruns them with doubled
precision until they are decided or the cap is reached.
"""

import math
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, TypeVar, Union

import structlog
from mpmath import iv, libmp
from sympy import integer_nthroot

from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.config import (
    DEFAULT_PRECISION_BITS,
    DEFAULT_PRECISION_CAP_BITS,
)
from digit_complexity_lab.errors import InputError, PrecisionExhausted
from digit_complexity_lab.metrics import get_lab_metrics

logger = structlog.get_logger(__name__)

MIN_PRECISION_BITS = 32
GUARD_BITS = 16

_PRECISION: ContextVar[int] = ContextVar(
    "precision_bits", default=DEFAULT_PRECISION_BITS
)
_CAP: ContextVar[int] = ContextVar(
    "precision_cap_bits", default=DEFAULT_PRECISION_CAP_BITS
)
_LOG_BASE: ContextVar[str] = ContextVar("log_base", default="e")

T = TypeVar("T")
RealLike = Union["BigReal", int, Fraction, str]


@dataclass(frozen=True)
class EvalContext:
    """Snapshot of the active evaluation settings."""

    precision_bits: int
    cap_bits: int
    log_base: str


def current_precision() -> int:
    """Working precision of the active context in bits."""
    return _PRECISION.get()


def current_cap() -> int:
    """Precision cap of the active context in bits."""
    return _CAP.get()


def current_log_base() -> str:
    """Logarithm base used by bound formulas, ``"e"`` or ``"2"``."""
    return _LOG_BASE.get()


@contextmanager
def eval_context(
    precision_bits: int,
    cap_bits: Optional[int] = None,
    log_base: Optional[str] = None,
) -> Iterator[EvalContext]:
    """Run a block with the given working precision.

    Args:
        precision_bits: Working precision, at least 32 bits.
        cap_bits: Largest precision ``certify`` may escalate to; defaults to
            the enclosing context's cap, raised to ``precision_bits`` if lower.
        log_base: Optional switch of the bound-formula logarithm.

    Yields:
        EvalContext: The active settings.

    Raises:
        InputError: For a precision below 32 bits or an unknown log base.
    """
    if precision_bits < MIN_PRECISION_BITS:
        raise InputError(f"precision must be at least {MIN_PRECISION_BITS} bits")
    if log_base is not None and log_base not in ("e", "2"):
        raise InputError(f"unknown log base {log_base!r}")
    cap = max(precision_bits, cap_bits if cap_bits is not None else _CAP.get())
    tokens = [_PRECISION.set(precision_bits), _CAP.set(cap)]
    base_token = _LOG_BASE.set(log_base) if log_base is not None else None
    try:
        yield EvalContext(precision_bits, cap, _LOG_BASE.get())
    finally:
        if base_token is not None:
            _LOG_BASE.reset(base_token)
        _CAP.reset(tokens[1])
        _PRECISION.reset(tokens[0])


@contextmanager
def _interval_precision(bits: int) -> Iterator[None]:
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def _raw_to_fraction(raw: tuple) -> Fraction:
    if raw in (libmp.finf, libmp.fninf, libmp.fnan):
        raise PrecisionExhausted("interval evaluation overflowed to infinity")
    p, q = libmp.to_rational(raw)
    return Fraction(p, q)


def dyadic_floor(x: Fraction, exponent: int) -> Fraction:
    """Largest multiple of ``2^exponent`` not above ``x``."""
    if exponent >= 0:
        step = 1 << exponent
        return Fraction(math.floor(x / step) * step)
    scale = 1 << -exponent
    return Fraction(math.floor(x * scale), scale)


def dyadic_ceil(x: Fraction, exponent: int) -> Fraction:
    return -dyadic_floor(-x, exponent)


@dataclass(frozen=True)
class BigReal:
    """A real number enclosed by an interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction
    precision: int = DEFAULT_PRECISION_BITS

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise InputError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, x: RealLike) -> "BigReal":
        """Point interval holding an exact rational."""
        if isinstance(x, BigReal):
            return x
        q = as_rational(x)
        return cls(q, q, current_precision())

    @classmethod
    def hull(cls, *values: RealLike) -> "BigReal":
        """Smallest interval containing all the given values."""
        reals = [coerce_real(v) for v in values]
        return cls(
            min(r.lo for r in reals),
            max(r.hi for r in reals),
            min(r.precision for r in reals),
        )

    @classmethod
    def constant(cls, name: str) -> "BigReal":
        """Enclosure of an mpmath constant such as ``"pi"`` or ``"e"``."""
        bits = current_precision()
        with _interval_precision(bits + GUARD_BITS):
            value = +getattr(iv, name)
        return cls._from_interval(value, bits)

    @classmethod
    def _from_interval(cls, value: object, bits: int) -> "BigReal":
        lo_raw, hi_raw = value._mpi_  # type: ignore[attr-defined]
        return cls(_raw_to_fraction(lo_raw), _raw_to_fraction(hi_raw), bits)

    def _to_interval(self) -> object:
        prec = iv.prec
        lo = libmp.from_rational(
            self.lo.numerator, self.lo.denominator, prec, libmp.round_floor
        )
        hi = libmp.from_rational(
            self.hi.numerator, self.hi.denominator, prec, libmp.round_ceiling
        )
        return iv.make_mpf((lo, hi))

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: RealLike) -> bool:
        """Whether the interval contains the value (or interval) ``x``."""
        other = coerce_real(x)
        return self.lo <= other.lo and other.hi <= self.hi

    def __float__(self) -> float:
        return float(self.midpoint)

    def __repr__(self) -> str:
        if self.is_exact:
            return f"BigReal({self.lo})"
        return f"BigReal(~{float(self):.12g}, width={float(self.width):.3g})"

    def rounded(self, bits: Optional[int] = None) -> "BigReal":
        """Round a non-exact enclosure outward to ``bits`` significant bits.

        Exact values are returned unchanged, so exactness survives chains of
        rational operations.
        """
        if self.is_exact:
            return self
        bits = bits if bits is not None else max(self.precision, current_precision())
        magnitude = max(abs(self.lo), abs(self.hi), Fraction(1))
        scale = magnitude.numerator.bit_length() - magnitude.denominator.bit_length()
        exponent = scale - bits - GUARD_BITS
        return BigReal(
            dyadic_floor(self.lo, exponent), dyadic_ceil(self.hi, exponent), bits
        )

    def __neg__(self) -> "BigReal":
        return BigReal(-self.hi, -self.lo, self.precision)

    def __abs__(self) -> "BigReal":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return BigReal(Fraction(0), max(-self.lo, self.hi), self.precision)

    def __add__(self, other: RealLike) -> "BigReal":
        o = coerce_real(other)
        return BigReal(
            self.lo + o.lo, self.hi + o.hi, min(self.precision, o.precision)
        ).rounded()

    __radd__ = __add__

    def __sub__(self, other: RealLike) -> "BigReal":
        return self + (-coerce_real(other))

    def __rsub__(self, other: RealLike) -> "BigReal":
        return coerce_real(other) - self

    def __mul__(self, other: RealLike) -> "BigReal":
        o = coerce_real(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return BigReal(
            min(products), max(products), min(self.precision, o.precision)
        ).rounded()

    __rmul__ = __mul__

    def reciprocal(self) -> "BigReal":
        if self.lo <= 0 <= self.hi:
            raise InputError("division by an interval containing zero")
        return BigReal(1 / self.hi, 1 / self.lo, self.precision).rounded()

    def __truediv__(self, other: RealLike) -> "BigReal":
        return self * coerce_real(other).reciprocal()

    def __rtruediv__(self, other: RealLike) -> "BigReal":
        return coerce_real(other) * self.reciprocal()

    def __pow__(self, n: int) -> "BigReal":
        if not isinstance(n, int):
            return self.power(n)
        if n < 0:
            return (self ** (-n)).reciprocal()
        if n == 0:
            return BigReal.exact(1)
        if self.lo >= 0 or n % 2 == 1:
            return BigReal(self.lo**n, self.hi**n, self.precision).rounded()
        if self.hi <= 0:
            return BigReal(self.hi**n, self.lo**n, self.precision).rounded()
        top = max(-self.lo, self.hi) ** n
        return BigReal(Fraction(0), top, self.precision).rounded()

    def _apply(self, name: str) -> "BigReal":
        bits = current_precision()
        with _interval_precision(bits + GUARD_BITS):
            value = getattr(iv, name)(self._to_interval())
        return BigReal._from_interval(value, bits)

    def log(self) -> "BigReal":
        """Natural logarithm."""
        if self.lo <= 0:
            raise InputError("logarithm of a non-positive interval")
        if self.is_exact and self.lo == 1:
            return BigReal.exact(0)
        return self._apply("ln")

    def exp(self) -> "BigReal":
        if self.is_exact and self.lo == 0:
            return BigReal.exact(1)
        return self._apply("exp")

    def sqrt(self) -> "BigReal":
        return self.root(2)

    def root(self, k: int) -> "BigReal":
        """Real ``k``-th root of a non-negative interval, exact when possible."""
        if k < 1:
            raise InputError("root index must be positive")
        if self.lo < 0:
            raise InputError("root of a negative interval")
        if self.is_exact:
            exact = exact_root(self.lo, k)
            if exact is not None:
                return BigReal.exact(exact)
        if self.lo == 0:
            upper = BigReal.exact(self.hi).root(k) if self.hi else BigReal.exact(0)
            return BigReal(Fraction(0), upper.hi, upper.precision)
        return (self.log() / k).exp()

    def power(self, exponent: RealLike) -> "BigReal":
        """``self ** exponent`` for a positive base and a real exponent."""
        e = coerce_real(exponent)
        if e.is_exact and e.lo.denominator == 1:
            return self ** int(e.lo)
        if e.is_exact and self.is_exact and self.lo > 0:
            p, q = e.lo.numerator, e.lo.denominator
            exact = exact_root(self.lo, q)
            if exact is not None:
                return BigReal.exact(exact**p)
        if self.lo <= 0:
            raise InputError("non-integer power of a non-positive interval")
        return (self.log() * e).exp()

    def floor(self) -> Optional[int]:
        """The common floor of both endpoints, or ``None`` if they differ."""
        lo, hi = math.floor(self.lo), math.floor(self.hi)
        return lo if lo == hi else None

    def compare(self, other: RealLike) -> Optional[int]:
        """Certified three-way comparison.

        Returns:
            Optional[int]: -1, 0 or 1 when decided at the current enclosures,
            ``None`` when the intervals overlap without being equal points.
        """
        o = coerce_real(other)
        if self.hi < o.lo:
            return -1
        if self.lo > o.hi:
            return 1
        if self.is_exact and o.is_exact:
            return 0
        return None

    def le(self, other: RealLike) -> Optional[bool]:
        """Certified ``self <= other``."""
        o = coerce_real(other)
        if self.hi <= o.lo:
            return True
        if self.lo > o.hi:
            return False
        return None

    def lt(self, other: RealLike) -> Optional[bool]:
        """Certified ``self < other``."""
        o = coerce_real(other)
        if self.hi < o.lo:
            return True
        if self.lo >= o.hi:
            return False
        return None


def coerce_real(x: RealLike) -> BigReal:
    """Accept a ``BigReal`` or any exact rational."""
    if isinstance(x, BigReal):
        return x
    return BigReal.exact(x)


def exact_root(x: Fraction, k: int) -> Optional[Fraction]:
    """The rational ``k``-th root of a non-negative rational if it exists."""
    if x < 0:
        return None
    num, num_exact = integer_nthroot(x.numerator, k)
    den, den_exact = integer_nthroot(x.denominator, k)
    if num_exact and den_exact:
        return Fraction(int(num), int(den))
    return None


def log(x: RealLike) -> BigReal:
    """Logarithm in the base selected for bound formulas (natural by default)."""
    value = coerce_real(x).log()
    if current_log_base() == "2":
        return value / BigReal.exact(2).log()
    return value


def ln(x: RealLike) -> BigReal:
    """Natural logarithm regardless of the configured base."""
    return coerce_real(x).log()


def maximum(a: RealLike, b: RealLike) -> BigReal:
    """Enclosure of ``max(a, b)``."""
    x, y = coerce_real(a), coerce_real(b)
    return BigReal(max(x.lo, y.lo), max(x.hi, y.hi), min(x.precision, y.precision))


def iterated_exp(m: int, x: RealLike) -> BigReal:
    """The ``m``-th iterate of the exponential function."""
    if m < 1:
        raise InputError("iteration count must be at least 1")
    value = coerce_real(x)
    for _ in range(m):
        value = value.exp()
    return value


def _iterated_log_point(m: int, p: Fraction, threshold: BigReal) -> BigReal:
    if p <= threshold.lo:
        return BigReal.exact(1)
    value = BigReal.exact(p)
    for _ in range(m):
        value = value.log()
    if p >= threshold.hi:
        return value
    return BigReal.hull(value, 1)


def iterated_log(m: int, x: RealLike) -> BigReal:
    """The ``m``-th iterated logarithm, set to 1 wherever ``x <= exp_m(1)``.

    The function is non-decreasing, so the enclosure is obtained from the two
    endpoints separately.
    """
    if m < 1:
        raise InputError("iteration count must be at least 1")
    value = coerce_real(x)
    threshold = iterated_exp(m, 1)
    low = _iterated_log_point(m, value.lo, threshold)
    high = _iterated_log_point(m, value.hi, threshold)
    return BigReal(
        max(low.lo, Fraction(1)),
        max(high.hi, Fraction(1)),
        min(low.precision, high.precision),
    )


def certify(
    decide: Callable[[], Optional[T]],
    *,
    check: str,
    start_bits: Optional[int] = None,
) -> T:
    """Rerun an undecided comparison with doubled precision until it decides.

    Args:
        decide: Computes the answer at the active precision; ``None`` means
            undecided.
        check: Short name of the comparison for logs and metrics.
        start_bits: Initial precision; defaults to the active one.

    Returns:
        T: The first decided answer.

    Raises:
        PrecisionExhausted: If the cap is reached without a decision.
    """
    bits = start_bits if start_bits is not None else current_precision()
    cap = max(current_cap(), bits)
    metrics = get_lab_metrics()
    while True:
        with eval_context(bits, cap):
            result = decide()
        if result is not None:
            return result
        if bits >= cap:
            metrics.certification_failures.labels(check=check).inc()
            logger.error("precision_exhausted", check=check, bits=bits)
            raise PrecisionExhausted(f"{check}: undecided at the {cap}-bit cap")
        bits = min(2 * bits, cap)
        metrics.precision_escalations.inc()
        logger.debug("precision_escalated", check=check, bits=bits)
