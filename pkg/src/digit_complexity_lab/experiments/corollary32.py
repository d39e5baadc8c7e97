"""Digit changes of the gap series with exponents ``2^[j^eta]``.

The series has ``#{j : n_j <= n}`` terms up to ``n``, about
``(log_2 n)^(1/eta)``. Terms with equal exponents merge into one block, so
the observed ``nbdc(n)`` can grow more slowly than twice that count; both
fitted exponents are reported. For every hypothetical degree ``d`` the
report lists the grid points where ``nbdc(n)`` lies below the lower bound
an algebraic number of degree ``d`` would have to satisfy.
"""

from fractions import Fraction

import structlog

from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.arithmetic.reals import BigReal
from digit_complexity_lab.bounds import theorem31_threshold
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.models import ExperimentReport
from digit_complexity_lab.sources import (
    BaseDigitSource,
    GapSeriesSource,
    corollary32_spec,
)
from digit_complexity_lab.words import nbdc_profile

from .base import BaseExperiment, dyadic_grid, fit_log_exponent
from .theorem31 import REFERENCE_EXPONENT

logger = structlog.get_logger(__name__)

DEFAULT_ETA = Fraction(4, 5)
DEFAULT_DEGREES = (2, 3, 4)
TOLERANCE = 0.15


def corollary32_source(eta: object, base: int = 2) -> GapSeriesSource:
    return GapSeriesSource(corollary32_spec(eta, base))


class Corollary32Experiment(BaseExperiment):
    """Term count and digit changes of the eta-gap series."""

    name = "corollary32"

    def run(self, source: BaseDigitSource, digits: int) -> ExperimentReport:
        if not isinstance(source, GapSeriesSource):
            raise InputError("corollary32 runs on a gap series source")
        eta = as_rational(self.parameters.get("eta", DEFAULT_ETA))
        c1 = as_rational(self.parameters.get("c1", 1))
        raw_degrees = self.parameters.get("d", DEFAULT_DEGREES)
        if isinstance(raw_degrees, (int, str)):
            raw_degrees = [raw_degrees]
        degrees = tuple(int(d) for d in raw_degrees)
        grid = dyadic_grid(digits)
        profile = nbdc_profile(source.digits(digits))
        exponents = [n for _, n, _ in _terms_up_to(source, grid[-1])]
        counts = [profile[n] for n in grid]
        terms = [2 * sum(1 for e in exponents if e <= n) for n in grid]
        observed = fit_log_exponent(grid, counts)
        term_exponent = fit_log_exponent(grid, terms)

        below: dict[str, list[int]] = {}
        for d in degrees:
            below[str(d)] = [
                n
                for n, c in zip(grid, counts)
                if BigReal.exact(c).lt(theorem31_threshold(n, d, c1)) is True
            ]
        rows = [[n, c, t] for n, c, t in zip(grid, counts, terms)]
        summary = {
            "eta": str(eta),
            "expected_exponent": float(1 / eta),
            "term_count_exponent": term_exponent,
            "observed_exponent": observed,
            "reference_exponent": REFERENCE_EXPONENT,
            "term_count_within_tolerance": abs(term_exponent - float(1 / eta))
            <= TOLERANCE,
            "below_term_count": all(c <= t for c, t in zip(counts, terms)),
            "below_threshold": below,
        }
        logger.info(
            "corollary32_finished",
            eta=str(eta),
            observed=observed,
            term_count=term_exponent,
        )
        return self.report(
            source,
            digits,
            columns=["n", "nbdc", "twice_term_count"],
            rows=rows,
            summary=summary,
            notes=[
                "diagnostic: exponents are fitted on a finite dyadic grid",
                f"1/eta = {float(1 / eta):.4g} is below {REFERENCE_EXPONENT}",
            ],
        )


def _terms_up_to(source: GapSeriesSource, horizon: int) -> list[tuple[int, int, int]]:
    terms = []
    for term in source.spec.terms():
        if term[1] > horizon:
            break
        terms.append(term)
    return terms
