"""Tests for finite digit words."""

import pytest

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.words import FiniteWord


def test_parse_forms() -> None:
    """Compact and comma separated forms parse to the same symbols."""
    assert FiniteWord.parse("0110", 2).digits() == [0, 1, 1, 0]
    assert FiniteWord.parse("1,0,11", 16).digits() == [1, 0, 11]
    assert FiniteWord.parse("1,0,11", 16).to_string() == "1,0,11"


def test_slicing_and_value() -> None:
    """Slices stay words; the integer value reads the digits in the base."""
    word = FiniteWord.parse("10110", 2)
    assert word[1:4] == FiniteWord.parse("011", 2)
    assert word[0] == 1
    assert word.integer_value() == 22
    assert str(word.prefix(2)) == "10"


@pytest.mark.parametrize(
    ("text", "base"), [("012", 2), ("1,-1", 10), ("1a", 10)]
)
def test_invalid_words(text: str, base: int) -> None:
    """Digits outside the alphabet are input errors."""
    with pytest.raises(InputError):
        FiniteWord.parse(text, base)


def test_prefix_too_long() -> None:
    """Asking for more symbols than the word has is an error."""
    with pytest.raises(InputError):
        FiniteWord.parse("01", 2).prefix(3)
