"""Gap series ``sum_j a_j b^(-n_j)`` with non-decreasing exponents.

Digits are read off an exact rational partial sum. The omitted tail is
bounded by ``A * T(h)``: ``A`` is the supremum the coefficient rule declares
and ``T(h)`` bounds ``sum b^(-n_j)`` over ``n_j > h`` from the structure of
the exponent rule. Rules that cannot state either bound cannot be built.
"""

import math
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import structlog
from sympy import integer_nthroot

from digit_complexity_lab.arithmetic.positional import int_to_digits
from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.arithmetic.reals import BigReal, certify, current_cap, ln
from digit_complexity_lab.config import DEFAULT_MAX_DIGITS
from digit_complexity_lab.errors import InputError, PrecisionExhausted
from digit_complexity_lab.words.word import FiniteWord

from .base import BaseDigitSource

logger = structlog.get_logger(__name__)

INITIAL_GUARD_DIGITS = 16
DEFAULT_HORIZON = 20


def strict_tail_weight(horizon: int, base: int) -> Fraction:
    """``sum_{m > horizon} b^(-m)``, which bounds any strictly increasing tail."""
    return Fraction(1, (base - 1) * base**horizon)


class ExponentRule(ABC):
    """The exponent sequence ``n_1 <= n_2 <= ...``."""

    @abstractmethod
    def __call__(self, j: int) -> Optional[int]:
        """``n_j`` for ``j >= 1``, or ``None`` once a finite list is exhausted."""
        raise NotImplementedError

    @abstractmethod
    def tail_weight(self, horizon: int, base: int) -> Fraction:
        """Upper bound of ``sum b^(-n_j)`` over every ``j`` with ``n_j > horizon``."""
        raise NotImplementedError

    @abstractmethod
    def describe(self) -> str:
        raise NotImplementedError


class CoefficientRule(ABC):
    """The coefficient sequence ``a_j >= 1``."""

    @abstractmethod
    def __call__(self, j: int) -> int:
        raise NotImplementedError

    @abstractmethod
    def bound(self) -> int:
        """An upper bound of every ``a_j``."""
        raise NotImplementedError

    @abstractmethod
    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class GeometricExponents(ExponentRule):
    """``n_j = scale * ratio^j``."""

    ratio: int
    scale: int = 1

    def __post_init__(self) -> None:
        if self.ratio < 2 or self.scale < 1:
            raise InputError("geometric exponents need ratio >= 2 and scale >= 1")

    def __call__(self, j: int) -> Optional[int]:
        return self.scale * self.ratio**j

    def tail_weight(self, horizon: int, base: int) -> Fraction:
        return strict_tail_weight(horizon, base)

    def describe(self) -> str:
        return f"geometric:{self.ratio}:{self.scale}"


@dataclass(frozen=True)
class LinearExponents(ExponentRule):
    """``n_j = slope * j + offset``."""

    slope: int = 1
    offset: int = 0

    def __post_init__(self) -> None:
        if self.slope < 1:
            raise InputError("linear exponents need slope >= 1")

    def __call__(self, j: int) -> Optional[int]:
        return self.slope * j + self.offset

    def tail_weight(self, horizon: int, base: int) -> Fraction:
        return strict_tail_weight(horizon, base)

    def describe(self) -> str:
        return f"linear:{self.slope}:{self.offset}"


@dataclass(frozen=True)
class ListExponents(ExponentRule):
    """A finite explicit list; the series stops after it."""

    values: tuple[int, ...]

    def __call__(self, j: int) -> Optional[int]:
        return self.values[j - 1] if j <= len(self.values) else None

    def tail_weight(self, horizon: int, base: int) -> Fraction:
        return sum(
            (Fraction(1, base**v) for v in self.values if v > horizon), Fraction(0)
        )

    def describe(self) -> str:
        return "list:" + ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class DoublyExponentialExponents(ExponentRule):
    """``n_j = 2^[j^eta]`` with the integer part computed exactly."""

    eta: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.eta <= 1:
            raise InputError("eta must lie in (0, 1]")

    def __call__(self, j: int) -> Optional[int]:
        p, q = self.eta.numerator, self.eta.denominator
        floor_power, _ = integer_nthroot(j**p, q)
        return 2 ** int(floor_power)

    def tail_weight(self, horizon: int, base: int) -> Fraction:
        # [j^eta] = k forces j < (k + 1)^(1/eta) <= (k + 1)^q, which caps the
        # block of exponent 2^k at (k + 1)^q terms. Once 2^k >= q + 1 the
        # block weights at least halve, so the rest is at most the last block.
        q = math.ceil(1 / self.eta)
        k = max(horizon, 0).bit_length()
        total = Fraction(0)
        while 2**k < q + 1:
            total += Fraction((k + 1) ** q, base ** (2**k))
            k += 1
        return total + 2 * Fraction((k + 1) ** q, base ** (2**k))

    def describe(self) -> str:
        return f"doubly-exponential:{self.eta}"


@dataclass(frozen=True)
class ConstantCoefficients(CoefficientRule):
    value: int = 1

    def __call__(self, j: int) -> int:
        return self.value

    def bound(self) -> int:
        return self.value

    def describe(self) -> str:
        return f"const:{self.value}"


@dataclass(frozen=True)
class PeriodicCoefficients(CoefficientRule):
    """``a_j`` cycles through ``values``."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise InputError("periodic coefficients need at least one value")

    def __call__(self, j: int) -> int:
        return self.values[(j - 1) % len(self.values)]

    def bound(self) -> int:
        return max(self.values)

    def describe(self) -> str:
        return "periodic:" + ",".join(str(v) for v in self.values)
def parse_exponent_rule(text: str) -> ExponentRule:
    """Parse ``geometric:R[:S]``, ``linear:A[:B]``, ``list:n1,n2,...`` or
    ``doubly-exponential:ETA``.

    Raises:
        InputError: On an unknown rule or malformed parameters.
    """
    kind, _, rest = text.partition(":")
    args = [a for a in rest.split(":") if a]
    try:
        if kind == "geometric":
            return GeometricExponents(*(int(a) for a in args))
        if kind == "linear":
            return LinearExponents(*(int(a) for a in args))
        if kind == "list":
            return ListExponents(tuple(int(v) for v in rest.split(",") if v))
        if kind == "doubly-exponential":
            return DoublyExponentialExponents(as_rational(rest))
    except (TypeError, ValueError) as e:
        raise InputError(f"malformed exponent rule {text!r}") from e
    raise InputError(f"unknown exponent rule {kind!r}")


def parse_coefficient_rule(text: str) -> CoefficientRule:
    """Parse ``const:A`` or ``periodic:a1,a2,...``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "const":
            return ConstantCoefficients(int(rest) if rest else 1)
        if kind == "periodic":
            return PeriodicCoefficients(tuple(int(v) for v in rest.split(",") if v))
    except ValueError as e:
        raise InputError(f"malformed coefficient rule {text!r}") from e
    raise InputError(f"unknown coefficient rule {kind!r}")


@dataclass(frozen=True)
class GapSeriesSpec:
    """Base, exponent rule and coefficient rule of a gap series."""

    base: int
    exponents: ExponentRule
    coefficients: CoefficientRule = field(default_factory=ConstantCoefficients)
    theta: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.base < 2:
            raise InputError("base must be at least 2")

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(j, n_j, a_j)`` and check monotonicity and positivity."""
        j, previous = 1, 0
        while True:
            n = self.exponents(j)
            if n is None:
                return
            if n < 1 or n < previous:
                raise InputError(
                    f"exponents must be positive and non-decreasing (j={j})"
                )
            a = self.coefficients(j)
            if a < 1:
                raise InputError(f"coefficient a_{j} = {a} is not positive")
            yield j, n, a
            previous = n
            j += 1

    def blocks(self, horizon: int, extra: int) -> tuple[list[tuple[int, int]], bool]:
        """Exponent blocks ``(n, W(n))`` with ``n <= horizon`` plus ``extra`` more.

        Returns:
            The blocks and whether the series ended before they ran out.
        """
        blocks: list[tuple[int, int]] = []
        beyond = 0
        for _, n, a in self.terms():
            if blocks and blocks[-1][0] == n:
                blocks[-1] = (n, blocks[-1][1] + a)
                continue
            if n > horizon:
                beyond += 1
                if beyond > extra:
                    return blocks, False
            blocks.append((n, a))
        return blocks, True

    def spec_string(self) -> str:
        text = f"gap:{self.exponents.describe()}:{self.coefficients.describe()}"
        return text if self.theta is None else f"{text}:theta={self.theta}"


def partial_sum(spec: GapSeriesSpec, term_count: int) -> Fraction:
    """Exact sum of the first ``term_count`` terms."""
    total = Fraction(0)
    for j, n, a in spec.terms():
        if j > term_count:
            break
        total += Fraction(a, spec.base**n)
    return total


@dataclass(frozen=True)
class GapSeriesEnclosure:
    """Exact partial sum over ``n_j <= horizon`` and a bound on the omitted tail."""

    partial: Fraction
    tail_bound: Fraction
    horizon: int

    @property
    def upper(self) -> Fraction:
        return self.partial + self.tail_bound


def _sum_blocks(base: int, blocks: list[tuple[int, int]]) -> Fraction:
    if not blocks:
        return Fraction(0)
    top = blocks[-1][0]
    numerator = sum(w * base ** (top - n) for n, w in blocks)
    return Fraction(numerator, base**top)


def _check_below_one(value: Fraction) -> None:
    if value >= 1:
        raise InputError("partial sum reached 1: the series has no digit expansion")


def enclose(spec: GapSeriesSpec, horizon: int) -> GapSeriesEnclosure:
    """Partial sum up to ``horizon`` with a certified tail bound.

    The tail is bounded by the coefficient supremum times the exponent rule's
    tail weight, so coefficients that only grow far past the horizon are
    still covered.

    Raises:
        InputError: If the partial sum is not below 1.
    """
    blocks, finished = spec.blocks(horizon, 0)
    partial = _sum_blocks(spec.base, blocks)
    _check_below_one(partial)
    if finished:
        return GapSeriesEnclosure(partial, Fraction(0), horizon)
    weight = spec.exponents.tail_weight(horizon, spec.base)
    return GapSeriesEnclosure(partial, spec.coefficients.bound() * weight, horizon)


def gap_series_digits(spec: GapSeriesSpec, count: int) -> tuple[FiniteWord, Fraction]:
    """The first ``count`` digits and the exact partial sum that certified them.

    The guard beyond ``count`` doubles until the tail bound cannot move the
    value across a digit boundary.

    Raises:
        PrecisionExhausted: If the guard outgrows the precision cap, which
            happens when the value is a digit boundary reached only in the limit.
    """
    scale = spec.base**count
    guard = INITIAL_GUARD_DIGITS
    while True:
        box = enclose(spec, count + guard)
        leading = math.floor(box.partial * scale)
        if box.tail_bound == 0 or box.upper * scale < leading + 1:
            digits = int_to_digits(leading, spec.base, count)
            return FiniteWord(digits, spec.base), box.partial
        guard *= 2
        if guard * math.log2(spec.base) > current_cap():
            raise PrecisionExhausted(f"gap series digit {count} undecided")
        logger.debug("gap_series_guard_doubled", count=count, guard=guard)


class GapSeriesSource(BaseDigitSource):
    """Digit source backed by a ``GapSeriesSpec``."""

    def __init__(
        self, spec: GapSeriesSpec, max_digits: int = DEFAULT_MAX_DIGITS
    ) -> None:
        super().__init__(spec.base, max_digits)
        self.spec = spec

    def get_name(self) -> str:
        return "gap_series"

    def spec_string(self) -> str:
        return self.spec.spec_string()

    @property
    def is_rational(self) -> bool:
        return isinstance(self.spec.exponents, ListExponents)

    @property
    def exact_value(self) -> Optional[Fraction]:
        if not self.is_rational:
            return None
        return _sum_blocks(self.base, self.spec.blocks(10**18, 0)[0])

    def compute_digits(self, count: int) -> bytes:
        word, _ = gap_series_digits(self.spec, count)
        return word.symbols

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        exact = self.exact_value
        if exact is not None:
            return exact, exact
        horizon = max(1, -(-bits // (self.base.bit_length() - 1))) + 1
        while True:
            box = enclose(self.spec, horizon)
            if box.tail_bound * (1 << bits) <= 1:
                return box.partial, box.upper
            horizon *= 2


def corollary32_spec(eta: object, base: int = 2) -> GapSeriesSpec:
    """The series with ``n_j = 2^[j^eta]`` and all coefficients 1."""
    return GapSeriesSpec(base, DoublyExponentialExponents(as_rational(eta)))


def _growth_holds(n: int, n_next: int) -> bool:
    def decide() -> Optional[bool]:
        log_n = ln(n)
        needed = (1 + ln(log_n) / log_n.root(3)) * n
        return needed.le(BigReal.exact(n_next))

    return certify(decide, check="theorem92_growth")


def make_theorem92_spec(
    base: int,
    theta: object,
    exponents: ExponentRule,
    coefficients: CoefficientRule,
    horizon: int = DEFAULT_HORIZON,
) -> GapSeriesSpec:
    """Validate the transcendence hypotheses on ``j <= horizon`` and build the series.

    Checks ``n_1 >= 3``, the growth condition
    ``n_{j+1} >= (1 + log log n_j / (log n_j)^(1/3)) n_j``, the coefficient bound
    ``a_{j+1} <= b^(theta (n_{j+1} - n_j))`` and ``gcd(a_j, b) = 1``.

    Raises:
        InputError: Naming the first offending index ``j``.
    """
    th = as_rational(theta)
    if not 0 < th < 1:
        raise InputError("theta must lie in (0, 1)")
    spec = GapSeriesSpec(base, exponents, coefficients, th)
    terms = []
    for j, n, a in spec.terms():
        terms.append((j, n, a))
        if j > horizon:
            break
    if not terms or terms[0][1] < 3:
        raise InputError("hypothesis violated at j=1: n_1 must be at least 3")
    for j, _, a in terms[:horizon]:
        if math.gcd(a, base) != 1:
            raise InputError(f"hypothesis violated at j={j}: gcd(a_j, b) != 1")
    for (j, n, _), (_, n_next, a_next) in zip(terms, terms[1:]):
        if j >= horizon:
            break
        if not _growth_holds(n, n_next):
            raise InputError(f"hypothesis violated at j={j}: n_(j+1) grows too slowly")
        # a^q <= b^(p * gap) is the exact form of a <= b^(theta * gap).
        gap = n_next - n
        if a_next**th.denominator > base ** (th.numerator * gap):
            raise InputError(f"hypothesis violated at j={j}: a_(j+1) too large")
    logger.info("theorem92_spec_validated", spec=spec.spec_string(), horizon=horizon)
    return spec
