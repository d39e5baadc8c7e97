"""Finite words over the digit alphabet ``{0, ..., b-1}``."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Union, overload

from digit_complexity_lab.arithmetic.positional import digits_to_int
from digit_complexity_lab.errors import InputError

MAX_BASE = 256


@dataclass(frozen=True)
class FiniteWord:
    """An immutable digit word.

    Symbols are stored one per byte, which limits the base to ``256``; every
    base used by the lab's experiments is far below that.
    """

    symbols: bytes
    base: int

    def __post_init__(self) -> None:
        if not 2 <= self.base <= MAX_BASE:
            raise InputError(f"base must lie in [2, {MAX_BASE}], got {self.base}")
        if self.symbols and max(self.symbols) >= self.base:
            raise InputError(
                f"symbol {max(self.symbols)} is not a base-{self.base} digit"
            )

    @classmethod
    def from_digits(cls, digits: Iterable[int], base: int) -> "FiniteWord":
        """Build a word from integer digits.

        Raises:
            InputError: If a digit is negative or not below ``base``.
        """
        values = list(digits)
        if any(d < 0 for d in values):
            raise InputError("digits must be non-negative")
        if values and max(values) >= min(base, MAX_BASE + 1):
            raise InputError(f"digit {max(values)} is not a base-{base} digit")
        return cls(bytes(values), base)

    @classmethod
    def parse(cls, text: str, base: int) -> "FiniteWord":
        """Parse ``"0110"`` (bases up to 10) or ``"1,0,11"`` (any base)."""
        text = text.strip()
        if "," in text:
            parts = [p for p in text.split(",") if p.strip()]
        else:
            parts = list(text)
        try:
            return cls.from_digits((int(p) for p in parts), base)
        except ValueError as e:
            raise InputError(f"cannot parse word {text!r}") from e

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    @overload
    def __getitem__(self, index: int) -> int: ...

    @overload
    def __getitem__(self, index: slice) -> "FiniteWord": ...

    def __getitem__(self, index: Union[int, slice]) -> Union[int, "FiniteWord"]:
        if isinstance(index, slice):
            return FiniteWord(self.symbols[index], self.base)
        return self.symbols[index]

    def prefix(self, length: int) -> "FiniteWord":
        """The first ``length`` symbols.

        Raises:
            InputError: If the word is shorter than ``length``.
        """
        if length > len(self):
            raise InputError(f"word has only {len(self)} symbols, wanted {length}")
        return FiniteWord(self.symbols[:length], self.base)

    def digits(self) -> list[int]:
        return list(self.symbols)

    def to_string(self) -> str:
        """Compact text: concatenated digits for ``b <= 10``, else comma separated."""
        if self.base <= 10:
            return "".join(str(d) for d in self.symbols)
        return ",".join(str(d) for d in self.symbols)

    def integer_value(self) -> int:
        """The integer whose base-``b`` representation is this word."""
        return digits_to_int(self.symbols, self.base)

    def __str__(self) -> str:
        return self.to_string()
