"""Morse-Hedlund check: an aperiodic word has ``p(n) >= n + 1`` for every ``n``."""

from dataclasses import dataclass, field
from typing import Optional

import structlog

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.words.complexity import complexity_profile_fast
from digit_complexity_lab.words.word import FiniteWord

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class MorseHedlundReport:
    """Outcome of the check over ``n = 1..n_max`` on one prefix."""

    prefix_length: int
    n_max: int
    counts: tuple[int, ...]
    failures: tuple[int, ...] = field(default_factory=tuple)
    detected_period: Optional[int] = None
    preperiod: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[int]:
        return self.failures[0] if self.failures else None


def smallest_period(symbols: bytes) -> int:
    """Smallest ``p >= 1`` with ``s[i] == s[i + p]`` wherever both exist (KMP)."""
    if not symbols:
        return 0
    border = [0] * len(symbols)
    k = 0
    for i in range(1, len(symbols)):
        while k and symbols[i] != symbols[k]:
            k = border[k - 1]
        if symbols[i] == symbols[k]:
            k += 1
        border[i] = k
    return len(symbols) - border[-1]


def _preperiod(symbols: bytes, period: int) -> int:
    start = len(symbols) - period
    while start > 0 and symbols[start - 1] == symbols[start - 1 + period]:
        start -= 1
    return start


def morse_hedlund_check(word: FiniteWord, n_max: int) -> MorseHedlundReport:
    """Check ``p(n) >= n + 1`` for ``n <= n_max`` on a finite prefix.

    A failure is evidence of periodicity within the prefix. The report then
    carries the smallest period of the prefix's second half and the point
    from which the whole prefix follows that period.

    Raises:
        InputError: If ``n_max < 1`` or the prefix is shorter than ``2 * n_max``.
    """
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    if len(word) < 2 * n_max:
        raise InputError(
            f"prefix of length {len(word)} is too short for n_max={n_max}"
        )
    profile = complexity_profile_fast(word, n_max)
    failures = tuple(n for n, p in profile.items() if p < n + 1)
    if not failures:
        return MorseHedlundReport(len(word), n_max, profile.counts)
    tail = word.symbols[len(word) // 2 :]
    period = smallest_period(tail)
    preperiod = _preperiod(word.symbols, period)
    logger.info(
        "morse_hedlund_failure",
        first_failure=failures[0],
        period=period,
        preperiod=preperiod,
    )
    return MorseHedlundReport(
        len(word), n_max, profile.counts, failures, period, preperiod
    )
