"""Tests for digit changes and run boundaries."""

import pytest

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.words import FiniteWord, nbdc, nbdc_profile, run_boundaries

WORD = FiniteWord.parse("0011010", 2)


def test_nbdc() -> None:
    """Changes among the first ``n + 1`` digits."""
    assert nbdc(WORD, 0) == 0
    assert nbdc(WORD, 3) == 1
    assert nbdc(WORD, 6) == 4


def test_nbdc_profile_matches_pointwise() -> None:
    """The one-pass profile equals the pointwise counts."""
    profile = nbdc_profile(WORD)
    assert profile == [nbdc(WORD, n) for n in range(len(WORD))]


def test_run_boundaries() -> None:
    """Ends of the maximal runs, the last run excluded."""
    assert run_boundaries(WORD) == [2, 4, 5, 6]
    assert run_boundaries(FiniteWord.parse("1111", 2)) == []


def test_errors() -> None:
    """Counts need enough digits."""
    with pytest.raises(InputError):
        nbdc(WORD, 7)
    with pytest.raises(InputError):
        nbdc(WORD, -1)
    with pytest.raises(InputError):
        run_boundaries(FiniteWord.parse("1", 2))
