"""Certified digits of real algebraic numbers."""

import math
from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.algebraic.numbers import AlgebraicReal
from digit_complexity_lab.arithmetic.positional import int_to_digits
from digit_complexity_lab.arithmetic.reals import current_cap
from digit_complexity_lab.config import DEFAULT_MAX_DIGITS
from digit_complexity_lab.errors import InputError, PrecisionExhausted
from digit_complexity_lab.metrics import get_lab_metrics
from digit_complexity_lab.words.word import FiniteWord

from .base import BaseDigitSource

logger = structlog.get_logger(__name__)

DIGIT_GUARD_BITS = 32


def check_unit_interval(x: AlgebraicReal) -> None:
    """Certify ``0 < x < 1`` by refining the isolating interval.

    Raises:
        InputError: If ``x`` lies outside the open unit interval.
        PrecisionExhausted: If the cap is hit first (impossible for valid input).
    """
    if x.is_rational:
        if not 0 < x.rational_value < 1:
            raise InputError(f"{x.rational_value} is not in (0, 1)")
        return
    bits = 8
    while bits <= current_cap():
        lo, hi = x.refine(bits)
        if lo > 0 and hi < 1:
            return
        if hi <= 0 or lo >= 1:
            raise InputError(f"{x.to_text()} is not in (0, 1)")
        bits *= 2
    raise PrecisionExhausted("could not place the number inside (0, 1)")


def leading_integer(x: AlgebraicReal, base: int, count: int) -> int:
    """Certified ``floor(base^count * x)``.

    Exact for rationals, which yields the canonical expansion at digit
    boundaries. Otherwise the isolating interval is shrunk until both
    endpoints give the same floor.
    """
    scale = base**count
    if x.is_rational:
        return math.floor(x.rational_value * scale)
    bits = math.ceil(count * math.log2(base)) + DIGIT_GUARD_BITS
    cap = max(current_cap(), bits)
    while True:
        lo, hi = x.refine(bits)
        low, high = math.floor(lo * scale), math.floor(hi * scale)
        if low == high:
            return low
        if bits >= cap:
            get_lab_metrics().certification_failures.labels(check="digits").inc()
            raise PrecisionExhausted(f"digit {count} undecided at {bits} bits")
        bits = min(cap, bits + max(DIGIT_GUARD_BITS, bits // 4))
        get_lab_metrics().precision_escalations.inc()
        logger.debug("digit_precision_escalated", count=count, bits=bits)


class AlgebraicDigitSource(BaseDigitSource):
    """Digits of an algebraic number in ``(0, 1)``."""

    def __init__(
        self, x: AlgebraicReal, base: int, max_digits: int = DEFAULT_MAX_DIGITS
    ) -> None:
        """Initialize the source.

        Args:
            x: The number; ``0 < x < 1`` is certified here.
            base: Digit base.
            max_digits: Guard rail on requested digit counts.
        """
        super().__init__(base, max_digits)
        check_unit_interval(x)
        self.x = x

    def get_name(self) -> str:
        return "algebraic"

    def spec_string(self) -> str:
        return self.x.spec_string()

    @property
    def is_rational(self) -> bool:
        return self.x.is_rational

    @property
    def exact_value(self) -> Optional[Fraction]:
        return self.x.rational_value if self.x.is_rational else None

    def compute_digits(self, count: int) -> bytes:
        leading = leading_integer(self.x, self.base, count)
        return int_to_digits(leading, self.base, count)

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        return self.x.refine(bits)


def digits_of_algebraic(x: AlgebraicReal, base: int, count: int) -> FiniteWord:
    """The first ``count`` canonical base-``base`` digits of ``x`` in ``(0, 1)``."""
    return AlgebraicDigitSource(x, base).digits(count)
