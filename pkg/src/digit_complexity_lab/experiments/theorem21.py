"""Running supremum of ``p(n) / (n (log n)^eta)``.

The theorem concerns a limit superior, which no prefix decides; the table
is a diagnostic.
"""

from fractions import Fraction
from typing import Optional

import structlog

from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.arithmetic.reals import BigReal, ln
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.models import ExperimentReport
from digit_complexity_lab.sources import BaseDigitSource
from digit_complexity_lab.words import complexity_profile_fast

from .base import BaseExperiment

logger = structlog.get_logger(__name__)

DEFAULT_ETA = Fraction(9, 100)
DEFAULT_N_MAX = 200


class Theorem21Experiment(BaseExperiment):
    """Block complexity against ``n (log n)^eta``."""

    name = "theorem21"

    def run(self, source: BaseDigitSource, digits: int) -> ExperimentReport:
        eta = as_rational(self.parameters.get("eta", DEFAULT_ETA))
        n_max = int(self.parameters.get("n_max", DEFAULT_N_MAX))
        if n_max < 2 or n_max > digits:
            raise InputError(f"n_max must lie in [2, {digits}]")
        profile = complexity_profile_fast(source.digits(digits), n_max)
        rows: list[list[Optional[float]]] = []
        running = 0.0
        for n, p in profile.items():
            if n < 2:
                continue
            scale = n * ln(n).power(eta)
            ratio = float(BigReal.exact(p) / scale)
            running = max(running, ratio)
            rows.append([n, p, ratio, running, float(profile.trend_reliable(n))])
        logger.info("theorem21_finished", n_max=n_max, supremum=running)
        return self.report(
            source,
            digits,
            columns=["n", "p", "ratio", "running_sup", "trend_reliable"],
            rows=rows,
            summary={"eta": str(eta), "running_sup": running},
            notes=["diagnostic: the limit superior is not finitely checkable"],
        )
