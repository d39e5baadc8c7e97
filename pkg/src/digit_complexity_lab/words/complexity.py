"""Block complexity ``p(n)``: the number of distinct length-``n`` factors."""

from collections.abc import Iterator
from dataclasses import dataclass

import structlog

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.words.automaton import SuffixAutomaton
from digit_complexity_lab.words.word import FiniteWord

logger = structlog.get_logger(__name__)


def block_complexity(word: FiniteWord, n: int) -> int:
    """Count the distinct factors of length ``n`` by enumerating windows.

    Args:
        word: The word to scan.
        n: Factor length.

    Returns:
        int: Number of distinct windows; 0 when ``n`` exceeds the word length.

    Raises:
        InputError: If ``n`` is not positive.
    """
    if n <= 0:
        raise InputError(f"factor length must be positive, got {n}")
    symbols = word.symbols
    if n > len(symbols):
        return 0
    return len({symbols[i : i + n] for i in range(len(symbols) - n + 1)})


@dataclass(frozen=True)
class ComplexityProfile:
    """Values ``p(1), ..., p(n_max)`` of a finite prefix.

    These are lower bounds for the complexity of any infinite word having
    this prefix.
    """

    counts: tuple[int, ...]
    prefix_length: int
    base: int

    @property
    def n_max(self) -> int:
        return len(self.counts)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise InputError(f"n must lie in [1, {self.n_max}]")
        return self.counts[n - 1]

    def items(self) -> Iterator[tuple[int, int]]:
        return ((n, p) for n, p in enumerate(self.counts, start=1))

    def trend_reliable(self, n: int) -> bool:
        """Whether the prefix has at least ``n^2`` symbols."""
        return self.prefix_length >= n * n

    def csv_rows(self) -> list[tuple[int, int]]:
        """Rows ``(n, p(n))``."""
        return list(self.items())


def complexity_profile_fast(word: FiniteWord, n_max: int) -> ComplexityProfile:
    """All of ``p(1..n_max)`` from a single suffix automaton.

    Raises:
        InputError: If ``n_max`` is not positive.
    """
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    automaton = SuffixAutomaton(word)
    counts = automaton.distinct_factor_counts(n_max)
    logger.debug(
        "complexity_profile_built",
        prefix_length=len(word),
        states=len(automaton),
        n_max=n_max,
    )
    return ComplexityProfile(tuple(counts[1:]), len(word), word.base)


def complexity_profile_naive(word: FiniteWord, n_max: int) -> ComplexityProfile:
    """Reference profile, one window enumeration per ``n``."""
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    counts = tuple(block_complexity(word, n) for n in range(1, n_max + 1))
    return ComplexityProfile(counts, len(word), word.base)
