"""Systems of rational linear forms indexed by the places of Q.

A system assigns ``n`` forms of determinant 1 to finitely many places and the
coordinate forms ``X_1, ..., X_n`` to all others. An exponent tuple assigns
``n`` exact rationals to finitely many places, with zero sum and with column
maxima summing to at most 1.
"""

import itertools
import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import numpy as np
import structlog
import sympy
from pydantic import ValidationError

from digit_complexity_lab.algebraic.heights import RationalLinearForm
from digit_complexity_lab.arithmetic.rationals import (
    INFINITY,
    Place,
    as_rational,
    parse_place,
    place_abs,
    support_primes,
)
from digit_complexity_lab.bounds.reduction import Reduction
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.models import SystemDescription

logger = structlog.get_logger(__name__)

RANDOM_PRIMES = (2, 3, 5, 7)


def determinant(forms: Sequence[RationalLinearForm]) -> Fraction:
    """Exact determinant of the coefficient matrix of ``n`` forms."""
    matrix = sympy.Matrix(
        [
            [sympy.Rational(c.numerator, c.denominator) for c in form.coefficients]
            for form in forms
        ]
    )
    return as_rational(matrix.det())


def _place_order(place: Place) -> tuple[int, int]:
    return (0, 0) if place == INFINITY else (1, int(place))


@dataclass(frozen=True)
class ExponentTuple:
    """Exponents ``c_iv``; places not listed carry zeros."""

    n: int
    values: Mapping[Place, tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for place, row in self.values.items():
            if len(row) != self.n:
                raise InputError(f"place {place}: expected {self.n} exponents")
        if self.total != 0:
            raise InputError(f"exponents sum to {self.total}, expected 0")
        if self.column_max_sum > 1:
            raise InputError(
                f"column maxima sum to {self.column_max_sum}, expected at most 1"
            )

    @classmethod
    def of(cls, n: int, values: Mapping[Place, Sequence[object]]) -> "ExponentTuple":
        return cls(
            n,
            {
                parse_place(place): tuple(as_rational(v) for v in row)
                for place, row in values.items()
            },
        )

    @classmethod
    def zero(cls, n: int) -> "ExponentTuple":
        return cls(n)

    @classmethod
    def from_reduction(cls, n: int, reduced: Reduction) -> "ExponentTuple":
        """Exponents of an exact reduction.

        Raises:
            InputError: If the reduction carries interval values.
        """
        if not reduced.exact:
            raise InputError("twisted heights need exact exponents")
        return cls(n, {place: tuple(row) for place, row in reduced.c.items()})

    def at(self, place: Place) -> tuple[Fraction, ...]:
        return self.values.get(place, (Fraction(0),) * self.n)

    @property
    def places(self) -> list[Place]:
        return sorted(self.values, key=_place_order)

    @property
    def total(self) -> Fraction:
        return sum((sum(row, Fraction(0)) for row in self.values.values()), Fraction(0))

    @property
    def column_max_sum(self) -> Fraction:
        return sum((max(row) for row in self.values.values()), Fraction(0))


@dataclass(frozen=True)
class LinearFormSystemQ:
    """Forms ``L_1v, ..., L_nv`` at finitely many places of Q.

    Raises on construction unless every listed place has ``n`` forms in
    ``n`` variables with determinant 1, and the number of distinct forms
    over all places, the coordinate forms included, is at most ``r``.
    """

    n: int
    forms: Mapping[Place, tuple[RationalLinearForm, ...]] = field(
        default_factory=dict
    )
    r: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InputError("the dimension must be at least 2")
        for place, row in self.forms.items():
            if len(row) != self.n or any(f.dimension != self.n for f in row):
                raise InputError(
                    f"place {place}: expected {self.n} forms in {self.n} variables"
                )
            det = determinant(row)
            if det != 1:
                raise InputError(f"place {place}: determinant is {det}, expected 1")
        if self.r is not None and len(self.distinct_forms) > self.r:
            raise InputError(
                f"{len(self.distinct_forms)} distinct forms exceed r = {self.r}"
            )

    @classmethod
    def identity(cls, n: int) -> "LinearFormSystemQ":
        return cls(n)

    @classmethod
    def of(
        cls,
        n: int,
        forms: Mapping[Place, Sequence[Sequence[object]]],
        r: Optional[int] = None,
    ) -> "LinearFormSystemQ":
        return cls(
            n,
            {
                parse_place(place): tuple(RationalLinearForm.of(*row) for row in rows)
                for place, rows in forms.items()
            },
            r,
        )

    def coordinate_forms(self) -> tuple[RationalLinearForm, ...]:
        return tuple(RationalLinearForm.coordinate(i, self.n) for i in range(self.n))

    def forms_at(self, place: Place) -> tuple[RationalLinearForm, ...]:
        return self.forms.get(place, self.coordinate_forms())

    @property
    def places(self) -> list[Place]:
        return sorted(self.forms, key=_place_order)

    @property
    def distinct_forms(self) -> list[RationalLinearForm]:
        seen: dict[tuple[Fraction, ...], RationalLinearForm] = {}
        for form in [*self.coordinate_forms(), *itertools.chain(*self.forms.values())]:
            seen.setdefault(form.coefficients, form)
        return list(seen.values())

    @property
    def rank_bound(self) -> int:
        """``r`` if given, else the number of distinct forms."""
        return self.r if self.r is not None else len(self.distinct_forms)

    def script_H(self) -> Fraction:
        """``prod_v max |det(L_i1, ..., L_in)|_v`` over n-subsets of distinct forms.

        Every place outside the archimedean one and the primes dividing some
        determinant contributes 1, so the product is finite and exact.
        """
        dets = [
            determinant(subset)
            for subset in itertools.combinations(self.distinct_forms, self.n)
        ]
        nonzero = [d for d in dets if d != 0]
        value = Fraction(1)
        for place in [INFINITY, *support_primes(*nonzero)]:
            value *= max(place_abs(d, place) for d in dets)
        return value


def system_from_description(
    description: SystemDescription,
) -> tuple[LinearFormSystemQ, ExponentTuple]:
    """Build a validated system and exponent tuple from a parsed description."""
    system = LinearFormSystemQ.of(description.n, description.forms, description.r)
    exponents = ExponentTuple.of(description.n, description.c)
    return system, exponents


def load_system(source: Union[str, Path]) -> tuple[LinearFormSystemQ, ExponentTuple]:
    """Read a system from JSON text or a JSON file.

    Raises:
        InputError: For malformed JSON or invalid systems.
    """
    text = source.read_text() if isinstance(source, Path) else source
    try:
        description = SystemDescription.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise InputError(f"invalid system description: {e}") from e
    system, exponents = system_from_description(description)
    logger.debug("system_loaded", n=system.n, places=len(system.places))
    return system, exponents


def _random_fraction(rng: np.random.Generator, bound: int) -> Fraction:
    numerator = int(rng.integers(-bound, bound + 1))
    return Fraction(numerator, int(rng.integers(1, bound + 1)))


def _random_unimodular(
    rng: np.random.Generator, n: int, steps: int
) -> list[list[Fraction]]:
    """Product of ``steps`` elementary matrices with small rational entries."""
    matrix = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = (int(k) for k in rng.choice(n, size=2, replace=False))
        t = _random_fraction(rng, 3)
        matrix[i] = [a + t * b for a, b in zip(matrix[i], matrix[j])]
    return matrix


def _random_exponents(
    rng: np.random.Generator, n: int, budget: Fraction
) -> tuple[Fraction, ...]:
    raw = [Fraction(int(rng.integers(-8, 9)), 8) for _ in range(n)]
    mean = sum(raw, Fraction(0)) / n
    centred = [v - mean for v in raw]
    top = max(centred)
    if top > budget:
        centred = [v * budget / top for v in centred]
    return tuple(centred)


def random_system(
    rng: np.random.Generator, n: int = 2, steps: int = 4
) -> tuple[LinearFormSystemQ, ExponentTuple]:
    """A random determinant-1 system at ``inf`` and one small prime.

    Exponents are drawn at the same places, centred to sum zero per place
    and scaled so that the column maxima sum to at most 1.
    """
    prime = int(rng.choice(RANDOM_PRIMES))
    forms = {
        INFINITY: _random_unimodular(rng, n, steps),
        prime: _random_unimodular(rng, n, steps),
    }
    first = _random_exponents(rng, n, Fraction(1, 2))
    second = _random_exponents(rng, n, 1 - max(first))
    system = LinearFormSystemQ.of(n, forms)
    return system, ExponentTuple(n, {INFINITY: first, prime: second})
