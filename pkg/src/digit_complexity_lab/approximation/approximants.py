"""Eventually periodic approximants built from repetitions in a prefix.

A factorization ``U V W V X`` of a true prefix of ``x`` yields the rational
``xi = p / (b^r (b^s - 1))`` whose expansion is ``U (V W)^infinity``. It
shares the first ``r + s + |V|`` digits with ``x``.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    RealLike,
    certify,
    coerce_real,
    current_precision,
    log,
)
from digit_complexity_lab.bounds.section7 import solve_eta
from digit_complexity_lab.errors import CertificationError, InputError
from digit_complexity_lab.metrics import get_lab_metrics
from digit_complexity_lab.sources.base import BaseDigitSource
from digit_complexity_lab.sources.shifted import SourceLike, as_source
from digit_complexity_lab.words.word import FiniteWord

from .repetition import RepetitionScanner, UVWVXFactorization

logger = structlog.get_logger(__name__)

MIN_SHIFT_SIZE = 3


@dataclass(frozen=True)
class PeriodicApproximant:
    """``p / (b^r (b^s - 1))`` with certified error ``b^-(r + s + |V|)``."""

    p: int
    r: int
    s: int
    base: int
    error_exponent: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise InputError("the period length s must be positive")
        if self.r >= 1 and self.p % self.base == 0:
            raise InputError("b divides p although r >= 1")

    @property
    def t(self) -> int:
        return self.r + self.s

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.base**self.r * (self.base**self.s - 1))


def distance_bounds(
    source: BaseDigitSource, target: Fraction, bits: int
) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds for ``|x - target|`` from one enclosure of ``x``."""
    lo, hi = source.enclosure(bits)
    far = max(abs(lo - target), abs(hi - target))
    if lo <= target <= hi:
        return Fraction(0), far
    return min(abs(lo - target), abs(hi - target)), far


def certify_distance(
    source: BaseDigitSource, target: Fraction, exponent: int, check: str
) -> bool:
    """Decide ``|x - target| <= b^-exponent`` with growing enclosures of ``x``.

    Raises:
        PrecisionExhausted: If the enclosure never separates the two cases.
    """
    radius = Fraction(1, source.base**exponent)
    extra = exponent * source.base.bit_length()

    def decide() -> Optional[bool]:
        near, far = distance_bounds(source, target, current_precision() + extra)
        if far <= radius:
            return True
        if near > radius:
            return False
        return None

    return certify(decide, check=check)


def approximant_from_factorization(
    factorization: UVWVXFactorization, prefix: FiniteWord, x: SourceLike
) -> PeriodicApproximant:
    """The periodic approximant of a factorization, with certified error.

    Args:
        factorization: Non-degenerate factorization of ``prefix``.
        prefix: A true prefix of the expansion of ``x``.
        x: The approximated number or its digit source.

    Returns:
        PeriodicApproximant: ``p``, ``r``, ``s`` and the error exponent.

    Raises:
        InputError: For a degenerate factorization.
        CertificationError: If the error bound or ``b`` not dividing ``p``
            fails; both are theorems, so this signals a defect.
    """
    if factorization.is_degenerate:
        raise InputError("a degenerate factorization has no approximant")
    source = as_source(x, prefix.base)
    b = prefix.base
    r, s = factorization.r, factorization.s
    head = prefix[:r].integer_value()
    period = prefix[r : r + s].integer_value()
    p = head * (b**s - 1) + period
    if r >= 1 and p % b == 0:
        get_lab_metrics().certification_failures.labels(check="approximant_p").inc()
        raise CertificationError(f"b divides p = {p} with r = {r}")
    exponent = r + s + factorization.v_length
    value = Fraction(p, b**r * (b**s - 1))
    if not certify_distance(source, value, exponent, "approximant_error"):
        metrics = get_lab_metrics()
        metrics.certification_failures.labels(check="approximant_error").inc()
        raise CertificationError(
            f"|x - {value}| exceeds {b}^-{exponent}; the prefix is not a true prefix"
        )
    return PeriodicApproximant(p, r, s, b, exponent)


@dataclass(frozen=True)
class ShiftTriple:
    """One ``(r, t, p)`` of the construction with its inequality check."""

    prefix_length: int
    r: int
    t: int
    p: int
    v_length: int
    holds: bool
    calibration: float


@dataclass(frozen=True)
class Lemma61Report:
    v: BigReal
    u: BigReal
    c3: BigReal
    wanted: int
    triples: list[ShiftTriple] = field(default_factory=list)
    examined: int = 0

    @property
    def all_hold(self) -> bool:
        return all(triple.holds for triple in self.triples)

    @property
    def exhausted(self) -> bool:
        """True when the prefix budget ran out before ``wanted`` triples."""
        return len(self.triples) < self.wanted

    @property
    def growth_rates(self) -> list[float]:
        """Observed ``log t_n / (n log 2n)``; bounded if ``t_n <= (2n)^(C n)``."""
        return [
            math.log(triple.t) / (n * math.log(2 * n))
            for n, triple in enumerate(self.triples, start=1)
        ]


def _starts_at(t: int, c3: BigReal, u: BigReal, v: BigReal) -> bool:
    """Certified ``c3 (log t)^u >= (log t)^v``."""

    def decide() -> Optional[bool]:
        log_t = log(t)
        below = (c3 * log_t.power(u)).lt(log_t.power(v))
        return None if below is None else not below

    return certify(decide, check="shift_start")


def _shift_inequality(
    source: BaseDigitSource, approximant: PeriodicApproximant, v: BigReal
) -> bool:
    """Certify ``|b^t x - b^r x - p| <= (b^t)^-((log t)^-v)``."""
    b, t = approximant.base, approximant.t
    scale = b**approximant.r * (b**approximant.s - 1)
    extra = (approximant.error_exponent + 1) * b.bit_length()

    def decide() -> Optional[bool]:
        near, far = distance_bounds(
            source, approximant.value, current_precision() + extra
        )
        near, far = near * scale, far * scale
        bound = (-(t * log(b)) * log(t).power(-v)).exp()
        if BigReal.exact(far).le(bound):
            return True
        if bound.lt(near):
            return False
        return None

    return certify(decide, check="shift_inequality")


def lemma61_sequence(
    x: SourceLike,
    base: int,
    v: RealLike,
    count: int,
    c3: RealLike = 1,
    u: Optional[RealLike] = None,
    max_prefix: int = 1 << 14,
    strict: bool = False,
) -> Lemma61Report:
    """Shift triples ``(r_n, t_n, p_n)`` with ``t`` more than doubling each time.

    The first prefix length is the smallest one with ``t >= 3`` and
    ``c3 (log t)^u >= (log t)^v``; each later one is the smallest whose ``t``
    exceeds twice the previous ``t``. Every triple is checked against
    ``|b^t x - b^r x - p| <= (b^t)^-((log t)^-v)``. The inequality rests on a
    complexity hypothesis, so failures are reported per triple rather than
    raised unless ``strict`` is set.

    Args:
        x: Number in ``(0, 1)`` or digit source.
        base: Digit base.
        v: Decay rate, positive.
        count: Number of triples wanted.
        c3: Constant of the starting condition.
        u: Exponent of the starting condition, ``v + eta(v)`` by default.
        max_prefix: Largest prefix examined.
        strict: Raise on the first failing triple.

    Returns:
        Lemma61Report: The triples found within ``max_prefix`` digits, with
        ``|V| (log l)^u / l`` as the measured calibration of ``c3``.

    Raises:
        InputError: For ``v <= 0`` or ``count < 1``.
        CertificationError: In strict mode, for a failing triple.
    """
    rate = coerce_real(v)
    if rate.lo <= 0:
        raise InputError("v must be positive")
    if count < 1:
        raise InputError("count must be at least 1")
    exponent_u = coerce_real(u) if u is not None else rate + solve_eta(rate)
    constant = coerce_real(c3)
    source = as_source(x, base)
    digits = source.digits(max_prefix).symbols
    scanner = RepetitionScanner(base)
    triples: list[ShiftTriple] = []
    previous_t: Optional[int] = None
    for symbol in digits:
        scanner.append(symbol)
        if len(scanner) < 2:
            continue
        f = scanner.factorization
        if f.is_degenerate or f.t < MIN_SHIFT_SIZE:
            continue
        if previous_t is None:
            if not _starts_at(f.t, constant, exponent_u, rate):
                continue
        elif f.t <= 2 * previous_t:
            continue
        prefix = scanner.word
        approximant = approximant_from_factorization(f, prefix, source)
        holds = _shift_inequality(source, approximant, rate)
        ell = len(prefix)
        calibration = float(f.v_length * log(ell).power(exponent_u) / ell)
        triples.append(
            ShiftTriple(ell, f.r, f.t, approximant.p, f.v_length, holds, calibration)
        )
        if not holds:
            logger.warning("shift_inequality_failed", prefix=ell, r=f.r, t=f.t)
            if strict:
                raise CertificationError(
                    f"shift inequality fails at prefix {ell} (r={f.r}, t={f.t})"
                )
        previous_t = f.t
        if len(triples) == count:
            break
    logger.info(
        "shift_sequence_built", found=len(triples), wanted=count, examined=len(scanner)
    )
    return Lemma61Report(rate, exponent_u, constant, count, triples, len(scanner))
