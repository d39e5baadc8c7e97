"""Tests for block complexity and the Morse-Hedlund check."""

import random

import pytest

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.sources import AlgebraicDigitSource
from digit_complexity_lab.words import (
    FiniteWord,
    SuffixAutomaton,
    block_complexity,
    complexity_profile_fast,
    complexity_profile_naive,
    morse_hedlund_check,
    smallest_period,
)

RANDOM_SEED = 20240917
N_MAX = 30
ALGEBRAIC_PREFIX = 10_000
ALGEBRAIC_N_MAX = 100


def fibonacci_word(length: int) -> FiniteWord:
    """Prefix of the fixed point of ``0 -> 01, 1 -> 0``."""
    word = [0]
    while len(word) < length:
        word = [s for d in word for s in ((0, 1) if d == 0 else (0,))]
    return FiniteWord.from_digits(word[:length], 2)


@pytest.mark.parametrize("base", [2, 3, 10])
def test_fast_profile_matches_naive(base: int) -> None:
    """The automaton agrees with window enumeration on random words."""
    rng = random.Random(RANDOM_SEED + base)
    word = FiniteWord.from_digits((rng.randrange(base) for _ in range(500)), base)
    assert complexity_profile_fast(word, N_MAX) == complexity_profile_naive(
        word, N_MAX
    )


def test_fast_profile_on_sqrt2(sqrt2_binary: AlgebraicDigitSource) -> None:
    """Same agreement on certified digits of an algebraic number."""
    word = sqrt2_binary.digits(2000)
    fast = complexity_profile_fast(word, 40)
    assert fast == complexity_profile_naive(word, 40)
    assert fast[1] == 2
    assert all(p >= n + 1 for n, p in fast.items())


def test_sturmian_complexity() -> None:
    """The Fibonacci word has exactly ``n + 1`` factors of length ``n``."""
    profile = complexity_profile_fast(fibonacci_word(1000), N_MAX)
    assert profile.counts == tuple(n + 1 for n in range(1, N_MAX + 1))


def test_profile_accessors() -> None:
    """Indexing is 1-based and the trend needs ``n^2`` symbols."""
    profile = complexity_profile_fast(fibonacci_word(100), 12)
    assert profile.n_max == 12
    assert profile.trend_reliable(10)
    assert not profile.trend_reliable(11)
    assert profile.csv_rows()[0] == (1, 2)
    with pytest.raises(InputError):
        profile[13]


def test_block_complexity_edges() -> None:
    """Too-long factors give zero; non-positive lengths are errors."""
    word = FiniteWord.parse("0101", 2)
    assert block_complexity(word, 5) == 0
    assert block_complexity(word, 4) == 1
    with pytest.raises(InputError):
        block_complexity(word, 0)
    with pytest.raises(InputError):
        complexity_profile_fast(word, 0)


def test_automaton_contains_factors() -> None:
    """Membership and the linear state bound."""
    word = FiniteWord.parse("abracadabra".translate(str.maketrans("abrcd", "01234")), 5)
    automaton = SuffixAutomaton(word)
    assert automaton.contains(bytes([0, 1, 2]))
    assert not automaton.contains(bytes([1, 1]))
    assert len(automaton) <= 2 * len(word)


def test_morse_hedlund_passes_on_aperiodic_prefix() -> None:
    """Sturmian words are the extremal aperiodic case."""
    report = morse_hedlund_check(fibonacci_word(1000), 50)
    assert report.passed
    assert report.first_failure is None


@pytest.mark.slow
@pytest.mark.exact
@pytest.mark.parametrize(
    ("subject", "base"), [("sqrt2_minus_one", 2), ("cubic_fraction", 3)]
)
def test_morse_hedlund_on_algebraic_prefixes(
    request: pytest.FixtureRequest, subject: str, base: int
) -> None:
    """Long prefixes of irrational algebraic numbers have ``p(n) >= n + 1``."""
    x = request.getfixturevalue(subject)
    word = AlgebraicDigitSource(x, base).digits(ALGEBRAIC_PREFIX)
    report = morse_hedlund_check(word, ALGEBRAIC_N_MAX)
    assert report.passed
    assert len(report.counts) == ALGEBRAIC_N_MAX
    assert all(p >= n + 1 for n, p in enumerate(report.counts, start=1))
    assert report.counts[9] == block_complexity(word, 10)


def test_morse_hedlund_detects_period() -> None:
    """An eventually periodic prefix fails and reports its period."""
    word = FiniteWord.parse("00" + "01" * 60, 2)
    report = morse_hedlund_check(word, 20)
    assert not report.passed
    assert report.first_failure == 4
    assert report.detected_period == 2
    assert report.preperiod == 2


def test_morse_hedlund_needs_long_prefix() -> None:
    """The prefix must hold at least ``2 * n_max`` symbols."""
    with pytest.raises(InputError):
        morse_hedlund_check(fibonacci_word(30), 20)


def test_smallest_period() -> None:
    """KMP periods."""
    assert smallest_period(b"\x00\x01\x02\x00\x01") == 3
    assert smallest_period(b"\x01\x01\x01") == 1
    assert smallest_period(b"") == 0
