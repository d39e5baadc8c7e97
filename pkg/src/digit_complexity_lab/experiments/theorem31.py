"""Growth of the number of digit changes of an irrational algebraic number.

``nbdc(n)`` is tabulated on a dyadic grid and the exponent of ``log n`` is
fitted by least squares. The table also carries the lower-bound display
with ``c1 = 1`` and the largest ``c1`` the data allow on the grid.
"""

import structlog

from digit_complexity_lab.bounds import theorem31_threshold
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.models import ExperimentReport
from digit_complexity_lab.sources import AlgebraicDigitSource, BaseDigitSource
from digit_complexity_lab.words import nbdc_profile

from .base import BaseExperiment, dyadic_grid, fit_log_exponent

logger = structlog.get_logger(__name__)

REFERENCE_EXPONENT = 1.5


def source_degree(source: BaseDigitSource, default: object = None) -> int:
    """Degree of an algebraic source, else the ``d`` parameter.

    Raises:
        InputError: For rational sources or a missing degree.
    """
    if source.is_rational:
        raise InputError("the experiment needs an irrational algebraic number")
    if isinstance(source, AlgebraicDigitSource):
        return source.x.degree
    if default is None:
        raise InputError("parameter d is required for non-algebraic sources")
    return int(default)


class Theorem31Experiment(BaseExperiment):
    """Fitted exponent of ``log n`` in ``nbdc(n)``, compared with 3/2."""

    name = "theorem31"

    def run(self, source: BaseDigitSource, digits: int) -> ExperimentReport:
        d = source_degree(source, self.parameters.get("d"))
        grid = dyadic_grid(digits)
        profile = nbdc_profile(source.digits(digits))
        counts = [profile[n] for n in grid]
        thresholds = [float(theorem31_threshold(n, d)) for n in grid]
        exponent = fit_log_exponent(grid, counts)
        c1 = min(c / t for c, t in zip(counts, thresholds))
        rows = [[n, c, t, c / t] for n, c, t in zip(grid, counts, thresholds)]
        logger.info("theorem31_finished", degree=d, exponent=exponent, c1=c1)
        return self.report(
            source,
            digits,
            columns=["n", "nbdc", "threshold_c1_1", "ratio"],
            rows=rows,
            summary={
                "degree": d,
                "fitted_exponent": exponent,
                "reference_exponent": REFERENCE_EXPONENT,
                "c1_fit": c1,
            },
            notes=[
                "diagnostic: c1 is the largest constant consistent with the grid",
            ],
        )
