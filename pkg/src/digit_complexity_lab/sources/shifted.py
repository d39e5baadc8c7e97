"""Digit shifts ``x -> {b^k x}`` and coercion of plain values into sources."""

from fractions import Fraction
from typing import Optional, Union

from digit_complexity_lab.algebraic.numbers import AlgebraicReal
from digit_complexity_lab.arithmetic.positional import digits_to_int
from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.errors import InputError

from .algebraic import AlgebraicDigitSource
from .base import BaseDigitSource

SourceLike = Union[BaseDigitSource, AlgebraicReal, Fraction, int, str]


class ShiftedSource(BaseDigitSource):
    """The fractional part of ``b^shift * x``: the digits of ``x`` after ``shift``."""

    def __init__(self, parent: BaseDigitSource, shift: int) -> None:
        if shift < 0:
            raise InputError("shift must be non-negative")
        super().__init__(parent.base, parent.max_digits)
        self.parent = parent
        self.shift = shift

    def get_name(self) -> str:
        return self.parent.get_name()

    def spec_string(self) -> str:
        return f"{self.parent.spec_string()}:shift={self.shift}"

    @property
    def is_rational(self) -> bool:
        return self.parent.is_rational

    @property
    def exact_value(self) -> Optional[Fraction]:
        value = self.parent.exact_value
        if value is None:
            return None
        scaled = value * self.base**self.shift
        return scaled - (scaled.numerator // scaled.denominator)

    def compute_digits(self, count: int) -> bytes:
        return self.parent.digits(count + self.shift).symbols[self.shift :]

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        exact = self.exact_value
        if exact is not None:
            return exact, exact
        scale = self.base**self.shift
        lo, hi = self.parent.enclosure(bits + scale.bit_length())
        head = 0
        if self.shift:
            head = digits_to_int(self.parent.digits(self.shift).symbols, self.base)
        return lo * scale - head, hi * scale - head


def as_source(x: SourceLike, base: int) -> BaseDigitSource:
    """Accept a digit source, an algebraic number or a rational in ``(0, 1)``.

    Raises:
        InputError: If a source of another base is passed.
    """
    if isinstance(x, BaseDigitSource):
        if x.base != base:
            raise InputError(f"source has base {x.base}, expected {base}")
        return x
    if isinstance(x, AlgebraicReal):
        return AlgebraicDigitSource(x, base)
    return AlgebraicDigitSource(AlgebraicReal.rational(as_rational(x)), base)


def first_digit_shift(source: BaseDigitSource, digit: int, limit: int) -> Optional[int]:
    """Smallest ``k < limit`` with ``a_{k+1} == digit``, or ``None``."""
    position = source.digits(limit).symbols.find(bytes([digit]))
    return None if position < 0 else position
