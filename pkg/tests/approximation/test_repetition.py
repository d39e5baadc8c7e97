"""Tests for longest non-overlapping repetitions."""

import random

import pytest

from digit_complexity_lab.approximation import (
    RepetitionScanner,
    UVWVXFactorization,
    best_repetition,
    best_repetition_naive,
)
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.sources import AlgebraicDigitSource
from digit_complexity_lab.words import FiniteWord

RANDOM_SEED = 7
WORD_COUNT = 40


def test_small_factorizations() -> None:
    """Hand-checked ``U V W V X`` factorizations."""
    assert best_repetition(FiniteWord.parse("0110", 2)) == UVWVXFactorization(
        4, 0, 1, 3
    )
    found = best_repetition(FiniteWord.parse("01010", 2))
    assert found == UVWVXFactorization(5, 0, 2, 2)
    u, v, w, v2, x = found.parts(FiniteWord.parse("01010", 2))
    assert (str(u), str(v), str(w), str(v2), str(x)) == ("", "01", "", "01", "0")


def test_no_repeated_symbol_is_degenerate() -> None:
    """Without a repeated symbol the factorization is degenerate."""
    found = best_repetition(FiniteWord.parse("0123", 4))
    assert found.is_degenerate
    assert found.to_record().degenerate


@pytest.mark.parametrize("base", [2, 3, 5])
def test_matches_naive_on_random_words(base: int) -> None:
    """Automaton result equals the quadratic oracle."""
    rng = random.Random(RANDOM_SEED * base)
    for _ in range(WORD_COUNT):
        length = rng.randrange(2, 120)
        digits = [rng.randrange(base) for _ in range(length)]
        word = FiniteWord.from_digits(digits, base)
        assert best_repetition(word) == best_repetition_naive(word)


def test_scanner_tracks_every_prefix(sqrt2_binary: AlgebraicDigitSource) -> None:
    """The online scanner agrees with the batch search on each prefix."""
    word = sqrt2_binary.digits(300)
    scanner = RepetitionScanner(2)
    for length, symbol in enumerate(word, start=1):
        scanner.append(symbol)
        if length >= 2:
            assert scanner.factorization == best_repetition(word[:length])
    assert scanner.word == word


def test_short_words_are_rejected() -> None:
    """Repetitions need two symbols."""
    with pytest.raises(InputError):
        best_repetition(FiniteWord.parse("1", 2))
    with pytest.raises(InputError):
        best_repetition_naive(FiniteWord.parse("1", 2))
    with pytest.raises(InputError):
        RepetitionScanner(2).factorization
