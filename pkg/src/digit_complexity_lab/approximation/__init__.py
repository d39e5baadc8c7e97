"""Rational approximants built from digit expansions and their verification."""

from .approximants import (
    Lemma61Report,
    PeriodicApproximant,
    ShiftTriple,
    approximant_from_factorization,
    certify_distance,
    lemma61_sequence,
)
from .diophantine import (
    CugianiReport,
    ExponentSystem,
    RidoutReport,
    Solution,
    convergents,
    cugiani_scan,
    group_by_line,
    ridout_solutions,
    solutions_to_csv,
)
from .repetition import (
    RepetitionScanner,
    UVWVXFactorization,
    best_repetition,
    best_repetition_naive,
)
from .runs import (
    DoublingReport,
    Lemma81Report,
    NormalizedSubject,
    RunApproximant,
    Theorem31Chain,
    lemma81_check,
    liouville_threshold,
    normalize_subject,
    run_approximants,
    run_approximants_of,
    theorem31_chain,
)

__all__ = [
    "CugianiReport",
    "DoublingReport",
    "ExponentSystem",
    "Lemma61Report",
    "Lemma81Report",
    "NormalizedSubject",
    "PeriodicApproximant",
    "RepetitionScanner",
    "RidoutReport",
    "RunApproximant",
    "ShiftTriple",
    "Solution",
    "Theorem31Chain",
    "UVWVXFactorization",
    "approximant_from_factorization",
    "best_repetition",
    "best_repetition_naive",
    "certify_distance",
    "convergents",
    "cugiani_scan",
    "group_by_line",
    "lemma61_sequence",
    "lemma81_check",
    "liouville_threshold",
    "normalize_subject",
    "ridout_solutions",
    "run_approximants",
    "run_approximants_of",
    "solutions_to_csv",
    "theorem31_chain",
]
