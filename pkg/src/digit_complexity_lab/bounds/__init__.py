"""Explicit bounds, thresholds and exponent reductions."""

from .appendix import (
    AppendixConstants,
    appendix_constants,
    log_C,
    log_C_prime,
    m_of,
    t3,
    t4,
    t5,
)
from .formulas import (
    B_of,
    cor52_count,
    cor52_threshold,
    cugiani_epsilon,
    hadamard_bound,
    lemma81_count,
    t1,
    t2,
    theorem31_threshold,
    theorem51_count,
    theorem51_threshold,
)
from .reduction import (
    ExponentMap,
    ExponentValue,
    Reduction,
    check_exponents,
    corollary52_exponents,
    reduction,
    section7_exponents,
)
from .registry import evaluate_bound, get_formula, list_formulas
from .section7 import Section7Params, a1_count, eta_residual, section7_params, solve_eta

__all__ = [
    "AppendixConstants",
    "B_of",
    "ExponentMap",
    "ExponentValue",
    "Reduction",
    "Section7Params",
    "a1_count",
    "appendix_constants",
    "check_exponents",
    "cor52_count",
    "cor52_threshold",
    "corollary52_exponents",
    "cugiani_epsilon",
    "eta_residual",
    "evaluate_bound",
    "get_formula",
    "hadamard_bound",
    "lemma81_count",
    "list_formulas",
    "log_C",
    "log_C_prime",
    "m_of",
    "reduction",
    "section7_exponents",
    "section7_params",
    "solve_eta",
    "t1",
    "t2",
    "t3",
    "t4",
    "t5",
    "theorem31_threshold",
    "theorem51_count",
    "theorem51_threshold",
]
