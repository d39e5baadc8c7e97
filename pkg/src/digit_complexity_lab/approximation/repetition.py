"""Longest non-overlapping repetitions in prefixes of a digit word.

A prefix ``A`` of length ``l`` is factored as ``U V W V X`` where the two
copies of ``V`` start at ``r = |U|`` and ``r + s`` with ``s = |V W| >= |V|``.
The factorization of interest has ``|V|`` maximal, then ``r`` minimal, then
``s`` minimal. With ``r`` minimal, either ``r = 0`` or the last digits of
``U`` and ``V W`` differ.
"""

from dataclasses import dataclass
from typing import Optional

import structlog

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.models import FactorizationRecord
from digit_complexity_lab.words.automaton import SuffixAutomaton
from digit_complexity_lab.words.word import FiniteWord

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class UVWVXFactorization:
    """Offsets of ``U V W V X`` inside a prefix of length ``prefix_length``."""

    prefix_length: int
    r: int
    v_length: int
    s: int

    @classmethod
    def degenerate(cls, prefix_length: int) -> "UVWVXFactorization":
        return cls(prefix_length, 0, 0, 0)

    @property
    def is_degenerate(self) -> bool:
        return self.v_length == 0

    @property
    def t(self) -> int:
        return self.r + self.s

    @property
    def w_length(self) -> int:
        return self.s - self.v_length

    @property
    def x_length(self) -> int:
        return self.prefix_length - self.t - self.v_length

    def parts(self, prefix: FiniteWord) -> tuple[FiniteWord, ...]:
        """The five factors ``U, V, W, V, X`` of ``prefix``."""
        if len(prefix) != self.prefix_length:
            raise InputError("prefix length does not match the factorization")
        cuts = [
            0,
            self.r,
            self.r + self.v_length,
            self.t,
            self.t + self.v_length,
            self.prefix_length,
        ]
        return tuple(prefix[a:b] for a, b in zip(cuts, cuts[1:]))

    def to_record(self) -> FactorizationRecord:
        return FactorizationRecord(
            prefix_length=self.prefix_length,
            r=self.r,
            v_length=self.v_length,
            s=self.s,
            x_length=max(self.x_length, 0),
            degenerate=self.is_degenerate,
        )


def best_repetition(prefix: FiniteWord) -> UVWVXFactorization:
    """Factor ``prefix`` with the longest non-overlapping repeated ``V``.

    A factor of length ``L`` in an automaton state occurs ending at the
    state's first and last end positions, so it repeats without overlap when
    those are at least ``L`` apart. The minimal ``r`` is the first occurrence
    of some such factor of maximal length.

    Args:
        prefix: Word of length at least 2.

    Returns:
        UVWVXFactorization: The factorization, degenerate when no symbol
        repeats.

    Raises:
        InputError: For words shorter than 2.
    """
    length = len(prefix)
    if length < 2:
        raise InputError("a repetition needs a prefix of length at least 2")
    automaton = SuffixAutomaton(prefix)
    best = 0
    for node in automaton.nodes[1:]:
        candidate = min(node.length, node.last_end - node.first_end)
        if node.link is not None and candidate > node.link.length:
            best = max(best, candidate)
    if best == 0:
        return UVWVXFactorization.degenerate(length)
    r = min(
        node.first_end - best + 1
        for node in automaton.nodes[1:]
        if node.link is not None
        and node.link.length < best <= node.length
        and node.last_end - node.first_end >= best
    )
    symbols = prefix.symbols
    s = symbols.find(symbols[r : r + best], r + best) - r
    return UVWVXFactorization(length, r, best, s)


def best_repetition_naive(prefix: FiniteWord) -> UVWVXFactorization:
    """Quadratic oracle for ``best_repetition`` over all pairs of starts."""
    symbols = prefix.symbols
    length = len(symbols)
    if length < 2:
        raise InputError("a repetition needs a prefix of length at least 2")
    best: Optional[tuple[int, int, int]] = None
    # following[j] is the longest common extension of starts i + 1 and j.
    following = [0] * (length + 1)
    for i in range(length - 1, -1, -1):
        current = [0] * (length + 1)
        for j in range(length - 1, i, -1):
            if symbols[i] == symbols[j]:
                current[j] = following[j + 1] + 1
            v_length = min(current[j], j - i)
            if v_length:
                key = (-v_length, i, j - i)
                if best is None or key < best:
                    best = key
        following = current
    if best is None:
        return UVWVXFactorization.degenerate(length)
    return UVWVXFactorization(length, best[1], -best[0], best[2])


class _Level:
    """Tracks the best pair of non-overlapping occurrences of one length."""

    def __init__(self, length: int) -> None:
        self.length = length
        self.first: dict[bytes, int] = {}
        self.inserted = 0
        self.best: Optional[tuple[int, int]] = None

    def step(self, symbols: bytearray, end: int) -> bool:
        """Account for the factor ending at ``end``; True if it repeats."""
        start = end - self.length + 1
        if start < 0:
            return False
        while self.inserted + self.length <= start:
            t = self.inserted
            self.first.setdefault(bytes(symbols[t : t + self.length]), t)
            self.inserted += 1
        first = self.first.get(bytes(symbols[start : end + 1]))
        if first is None:
            return False
        candidate = (first, start - first)
        if self.best is None or candidate < self.best:
            self.best = candidate
        return True


class RepetitionScanner:
    """Online ``best_repetition`` for every prefix of a growing word.

    Appending one symbol raises the maximal repeat length by at most one, so
    only the current length and the next one need tracking; the tracker for
    the length after that is rebuilt by replaying the word.
    """

    def __init__(self, base: int) -> None:
        self.base = base
        self._symbols = bytearray()
        self._current: Optional[_Level] = None
        self._next = _Level(1)

    def __len__(self) -> int:
        return len(self._symbols)

    def append(self, symbol: int) -> None:
        self._symbols.append(symbol)
        end = len(self._symbols) - 1
        if self._current is not None:
            self._current.step(self._symbols, end)
        if self._next.step(self._symbols, end):
            self._current = self._next
            self._next = _Level(self._current.length + 1)
            for e in range(end + 1):
                self._next.step(self._symbols, e)
            logger.debug(
                "repetition_grew",
                prefix=len(self._symbols),
                length=self._current.length,
            )

    def extend(self, symbols: bytes) -> None:
        for symbol in symbols:
            self.append(symbol)

    @property
    def factorization(self) -> UVWVXFactorization:
        """Best factorization of the word scanned so far."""
        length = len(self._symbols)
        if length < 2:
            raise InputError("a repetition needs a prefix of length at least 2")
        if self._current is None or self._current.best is None:
            return UVWVXFactorization.degenerate(length)
        r, s = self._current.best
        return UVWVXFactorization(length, r, self._current.length, s)

    @property
    def word(self) -> FiniteWord:
        return FiniteWord(bytes(self._symbols), self.base)
