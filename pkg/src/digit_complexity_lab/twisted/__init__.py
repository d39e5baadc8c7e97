"""Twisted heights over Q, the gap principle, the index and Roth's Lemma."""

from .height import QPower, TwistedHeightValue, compare_with_power, twisted_height
from .index import MultiHomPolynomial, derivative_orders, index
from .infima import (
    GapPrincipleReport,
    InfimaEstimate,
    gap_principle_experiment,
    gap_principle_suite,
    infima_estimate,
    primitive_points,
    search_small_points,
)
from .lemma53 import Lemma53Report, corollary52_verify, lemma53_verify
from .roth import RothReport, polynomial_height, roth_lemma_check
from .systems import (
    ExponentTuple,
    LinearFormSystemQ,
    determinant,
    load_system,
    random_system,
    system_from_description,
)

__all__ = [
    "ExponentTuple",
    "GapPrincipleReport",
    "InfimaEstimate",
    "Lemma53Report",
    "LinearFormSystemQ",
    "MultiHomPolynomial",
    "QPower",
    "RothReport",
    "TwistedHeightValue",
    "compare_with_power",
    "corollary52_verify",
    "derivative_orders",
    "determinant",
    "gap_principle_experiment",
    "gap_principle_suite",
    "index",
    "infima_estimate",
    "lemma53_verify",
    "load_system",
    "polynomial_height",
    "primitive_points",
    "random_system",
    "roth_lemma_check",
    "search_small_points",
    "system_from_description",
    "twisted_height",
]
