"""Champernowne's number: the concatenation of 1, 2, 3, ... written in base b."""

from digit_complexity_lab.arithmetic.positional import int_to_digits
from digit_complexity_lab.config import DEFAULT_MAX_DIGITS
from digit_complexity_lab.words.word import FiniteWord

from .base import BaseDigitSource


class ChampernowneSource(BaseDigitSource):
    """Digits of the base-``b`` Champernowne number, exact by construction."""

    def __init__(self, base: int, max_digits: int = DEFAULT_MAX_DIGITS) -> None:
        super().__init__(base, max_digits)

    def get_name(self) -> str:
        return "champernowne"

    def spec_string(self) -> str:
        return f"champernowne:{self.base}"

    def compute_digits(self, count: int) -> bytes:
        out = bytearray()
        width, block_start = 1, 1
        while len(out) < count:
            # Every integer in [b^(w-1), b^w) has exactly w digits.
            block_end = block_start * self.base
            for k in range(block_start, block_end):
                out += int_to_digits(k, self.base, width)
                if len(out) >= count:
                    break
            width, block_start = width + 1, block_end
        return bytes(out[:count])


def champernowne_digits(base: int, count: int) -> FiniteWord:
    """The first ``count`` digits of Champernowne's number in ``base``."""
    return ChampernowneSource(base).digits(count)
