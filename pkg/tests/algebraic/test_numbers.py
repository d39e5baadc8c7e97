"""Tests for real algebraic numbers."""

from fractions import Fraction

import pytest

from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.algebraic.numbers import normalize_coefficients
from digit_complexity_lab.errors import InputError

REFINE_BITS = 100


def test_normalize_coefficients() -> None:
    """Trailing zeros, content and sign are removed."""
    assert normalize_coefficients([0, -4, -2, 0]) == (0, 2, 1)
    assert normalize_coefficients([-2, 0, 1]) == (-2, 0, 1)
    with pytest.raises(InputError):
        normalize_coefficients([5, 0])


def test_sqrt2_basic_properties(sqrt2: AlgebraicReal) -> None:
    """Degree, rationality and the text format."""
    assert sqrt2.degree == 2
    assert not sqrt2.is_rational
    assert sqrt2.to_text() == "[-2,0,1] 1 3/2"
    assert AlgebraicReal.parse("[-2,0,1] 1/1 3/2") == sqrt2
    assert sqrt2.spec_string() == "algebraic:[-2,0,1]:1:3/2"


@pytest.mark.exact
def test_refine_brackets_the_root(sqrt2: AlgebraicReal) -> None:
    """Refinement reaches the requested width and keeps the root inside."""
    lo, hi = sqrt2.refine(REFINE_BITS)
    assert hi - lo <= Fraction(1, 2**REFINE_BITS)
    assert lo * lo < 2 < hi * hi
    enclosure = sqrt2.enclosure(REFINE_BITS // 2)
    assert enclosure.lo <= lo and hi <= enclosure.hi


@pytest.mark.exact
def test_translate_and_scale(sqrt2: AlgebraicReal) -> None:
    """Exact minimal polynomials of ``x + t`` and ``m x``."""
    shifted = sqrt2.translate(-1)
    assert shifted.coefficients == (-1, 2, 1)
    assert (shifted.lo, shifted.hi) == (Fraction(0), Fraction(1, 2))
    scaled = sqrt2.scale_by(2)
    assert scaled.coefficients == (-8, 0, 1)
    assert (scaled.lo, scaled.hi) == (Fraction(2), Fraction(3))


def test_rational_numbers() -> None:
    """Degree-one numbers refine to themselves."""
    x = AlgebraicReal.rational("3/7")
    assert x.is_rational
    assert x.rational_value == Fraction(3, 7)
    assert x.refine(50) == (Fraction(3, 7), Fraction(3, 7))


def test_rational_value_of_irrational(sqrt2: AlgebraicReal) -> None:
    """Irrational numbers have no rational value."""
    with pytest.raises(InputError):
        _ = sqrt2.rational_value


@pytest.mark.parametrize(
    ("coefficients", "lo", "hi"),
    [
        ([-4, 0, 1], "1", "3"),  # reducible: root 2
        ([-2, 0, 1], "-2", "2"),  # no sign change, two roots
        ([-1, 2], "1/2", "1"),  # endpoint is the root
        ([-2, 0, 1], "3/2", "1"),  # empty interval
        ([1, 2, 1], "-2", "0"),  # double root, no sign change
    ],
)
def test_invalid_numbers(coefficients: list[int], lo: str, hi: str) -> None:
    """Malformed polynomial or interval data are rejected."""
    with pytest.raises(InputError):
        AlgebraicReal.from_coefficients(coefficients, lo, hi)


def test_parse_rejects_garbage() -> None:
    """The text format is ``[c0,c1,...] lo hi``."""
    with pytest.raises(InputError):
        AlgebraicReal.parse("sqrt(2)")
    with pytest.raises(InputError):
        AlgebraicReal.parse("[a,b] 1 2")
