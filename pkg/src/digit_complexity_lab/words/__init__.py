"""Combinatorics on finite digit words."""

from .automaton import SuffixAutomaton
from .complexity import (
    ComplexityProfile,
    block_complexity,
    complexity_profile_fast,
    complexity_profile_naive,
)
from .morse_hedlund import MorseHedlundReport, morse_hedlund_check, smallest_period
from .runs import nbdc, nbdc_profile, run_boundaries
from .word import FiniteWord

__all__ = [
    "ComplexityProfile",
    "FiniteWord",
    "MorseHedlundReport",
    "SuffixAutomaton",
    "block_complexity",
    "complexity_profile_fast",
    "complexity_profile_naive",
    "morse_hedlund_check",
    "nbdc",
    "nbdc_profile",
    "run_boundaries",
    "smallest_period",
]
