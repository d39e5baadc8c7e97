"""Base experiment module."""

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any, ClassVar

import numpy as np

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.models import ExperimentReport
from digit_complexity_lab.sources import BaseDigitSource

MIN_GRID_EXPONENT = 4
MIN_GRID_POINTS = 3


class BaseExperiment(ABC):
    """Base class for all experiments.

    An experiment reads a prefix of one digit source and tabulates a
    quantity whose asymptotic behaviour a theorem predicts. Subclasses set
    ``name`` and ``kind`` and implement ``run``.
    """

    name: ClassVar[str]
    kind: ClassVar[str] = "diagnostic"

    def __init__(self, **parameters: Any) -> None:
        self.parameters = parameters

    @abstractmethod
    def run(self, source: BaseDigitSource, digits: int) -> ExperimentReport:
        """Run the experiment on the first ``digits`` digits of ``source``.

        Returns:
            ExperimentReport: Table, summary and, for assertable experiments,
            the verdict.
        """
        raise NotImplementedError

    def report(
        self, source: BaseDigitSource, digits: int, **fields: Any
    ) -> ExperimentReport:
        return ExperimentReport(
            name=self.name,
            kind=self.kind,
            subject=source.spec_string(),
            base=source.base,
            digits=digits,
            **fields,
        )


def dyadic_grid(digits: int, k_min: int = MIN_GRID_EXPONENT) -> list[int]:
    """Powers ``2^k >= 2^k_min`` with ``2^k + 1 <= digits``.

    Raises:
        InputError: If fewer than three grid points fit.
    """
    grid = [1 << k for k in range(k_min, digits.bit_length() + 1)]
    grid = [n for n in grid if n + 1 <= digits]
    if len(grid) < MIN_GRID_POINTS:
        raise InputError(
            f"{digits} digits are insufficient for the n-grid; "
            f"need at least {(1 << (k_min + MIN_GRID_POINTS - 1)) + 1}"
        )
    return grid


def fit_log_exponent(ns: Sequence[int], values: Sequence[float]) -> float:
    """Least-squares slope of ``log value`` against ``log log n``.

    Points with a non-positive value are dropped.

    Raises:
        InputError: If fewer than three usable points remain.
    """
    points = [(n, v) for n, v in zip(ns, values) if v > 0 and n > math.e]
    if len(points) < MIN_GRID_POINTS:
        raise InputError("too few positive values to fit an exponent")
    x = np.log(np.log(np.array([n for n, _ in points], dtype=float)))
    y = np.log(np.array([v for _, v in points], dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
