"""Certified digit sources and the digit cache."""

from .algebraic import AlgebraicDigitSource, digits_of_algebraic
from .base import BaseDigitSource, DigitStream
from .cache import cache_file_name, cache_load, cache_store, read_cache
from .champernowne import ChampernowneSource, champernowne_digits
from .gap_series import (
    GapSeriesSource,
    GapSeriesSpec,
    corollary32_spec,
    gap_series_digits,
    make_theorem92_spec,
    parse_coefficient_rule,
    parse_exponent_rule,
    partial_sum,
)
from .shifted import ShiftedSource, SourceLike, as_source, first_digit_shift

__all__ = [
    "AlgebraicDigitSource",
    "BaseDigitSource",
    "ChampernowneSource",
    "DigitStream",
    "GapSeriesSource",
    "GapSeriesSpec",
    "ShiftedSource",
    "SourceLike",
    "as_source",
    "cache_file_name",
    "cache_load",
    "cache_store",
    "champernowne_digits",
    "corollary32_spec",
    "digits_of_algebraic",
    "first_digit_shift",
    "gap_series_digits",
    "make_theorem92_spec",
    "parse_coefficient_rule",
    "parse_exponent_rule",
    "partial_sum",
    "read_cache",
]
