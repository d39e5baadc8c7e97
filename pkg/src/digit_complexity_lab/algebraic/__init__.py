"""Real algebraic numbers and their heights."""

from digit_complexity_lab.algebraic.heights import (
    RationalLinearForm,
    euclidean_height,
    height,
    inhom_height,
    mahler_measure_squared,
)
from digit_complexity_lab.algebraic.numbers import AlgebraicReal

__all__ = [
    "AlgebraicReal",
    "RationalLinearForm",
    "euclidean_height",
    "height",
    "inhom_height",
    "mahler_measure_squared",
]
