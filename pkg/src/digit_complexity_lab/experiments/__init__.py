"""Experiments that tabulate digit statistics against theorems."""

from typing import Any

from digit_complexity_lab.errors import InputError

from .base import BaseExperiment, dyadic_grid, fit_log_exponent
from .corollary32 import Corollary32Experiment, corollary32_source
from .theorem21 import Theorem21Experiment
from .theorem31 import Theorem31Experiment, source_degree

EXPERIMENTS: dict[str, type[BaseExperiment]] = {
    cls.name: cls
    for cls in (Theorem21Experiment, Theorem31Experiment, Corollary32Experiment)
}


def get_experiment(name: str, **parameters: Any) -> BaseExperiment:
    """Instantiate a registered experiment.

    Raises:
        InputError: For an unknown name.
    """
    try:
        return EXPERIMENTS[name](**parameters)
    except KeyError as e:
        known = ", ".join(sorted(EXPERIMENTS))
        raise InputError(f"unknown experiment {name!r}; known: {known}") from e


__all__ = [
    "EXPERIMENTS",
    "BaseExperiment",
    "Corollary32Experiment",
    "Theorem21Experiment",
    "Theorem31Experiment",
    "corollary32_source",
    "dyadic_grid",
    "fit_log_exponent",
    "get_experiment",
    "source_degree",
]
