"""Twisted heights of rational vectors.

For ``Q = B^k`` with rational ``B >= 1`` and ``k >= 0`` every factor
``|L_iv(x)|_v Q^-c_iv`` is a rational times a rational power of ``B``, and
so is their product. Values are kept in that form, which makes every
comparison with another value or with a power ``Q^-delta`` exact.
"""

import functools
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import structlog

from digit_complexity_lab.arithmetic.rationals import (
    INFINITY,
    Place,
    RationalLike,
    as_rational,
    place_abs,
    support_primes,
)
from digit_complexity_lab.arithmetic.reals import BigReal
from digit_complexity_lab.errors import InputError

from .systems import ExponentTuple, LinearFormSystemQ

logger = structlog.get_logger(__name__)


def compare_with_power(a: Fraction, base: Fraction, f: Fraction) -> int:
    """Sign of ``a - base^f`` for ``a >= 0`` and ``base > 0``, exactly."""
    if a == 0:
        return -1
    p, q = f.numerator, f.denominator
    left, right = a**q, base**p
    return (left > right) - (left < right)


@dataclass(frozen=True)
class QPower:
    """The parameter ``Q = base^exponent``."""

    base: Fraction
    exponent: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.base < 1 or self.exponent < 0:
            raise InputError("Q must be at least 1")

    @classmethod
    def of(cls, value: Union["QPower", RationalLike]) -> "QPower":
        if isinstance(value, QPower):
            return value
        return cls(as_rational(value))

    def real(self) -> BigReal:
        return BigReal.exact(self.base).power(self.exponent)

    def power_exponent(self, f: Fraction) -> Fraction:
        """Exponent of ``base`` in ``Q^f``."""
        return f * self.exponent


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class TwistedHeightValue:
    """The number ``coefficient * base^exponent``."""

    coefficient: Fraction
    exponent: Fraction
    base: Fraction

    def real(self) -> BigReal:
        return self.coefficient * BigReal.exact(self.base).power(self.exponent)

    def compare(self, other: "TwistedHeightValue") -> int:
        if other.base != self.base:
            raise InputError("values with different bases are not comparable exactly")
        if self.coefficient == 0 or other.coefficient == 0:
            return (self.coefficient > 0) - (other.coefficient > 0)
        ratio = self.coefficient / other.coefficient
        return compare_with_power(ratio, self.base, other.exponent - self.exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistedHeightValue):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other: "TwistedHeightValue") -> bool:
        return self.compare(other) < 0

    def __mul__(self, other: "TwistedHeightValue") -> "TwistedHeightValue":
        if other.base != self.base:
            raise InputError("values with different bases cannot be multiplied")
        return TwistedHeightValue(
            self.coefficient * other.coefficient,
            self.exponent + other.exponent,
            self.base,
        )

    def at_most_power(self, q: QPower, f: RationalLike) -> bool:
        """Exact ``self <= Q^f``."""
        target = q.power_exponent(as_rational(f)) - self.exponent
        return compare_with_power(self.coefficient, q.base, target) <= 0


def _places(
    x: Sequence[Fraction], system: LinearFormSystemQ, c: ExponentTuple
) -> list[Place]:
    values = [v for v in x if v != 0]
    for place in system.places:
        values.extend(f(x) for f in system.forms_at(place) if f(x) != 0)
    primes = {int(p) for p in support_primes(*values)}
    primes.update(int(p) for p in system.places if p != INFINITY)
    primes.update(int(p) for p in c.places if p != INFINITY)
    return [INFINITY, *sorted(primes)]


def place_factor(
    x: Sequence[Fraction],
    system: LinearFormSystemQ,
    c: ExponentTuple,
    q: QPower,
    place: Place,
) -> TwistedHeightValue:
    """``max_i |L_iv(x)|_v Q^-c_iv`` at one place."""
    terms = [
        TwistedHeightValue(place_abs(form(x), place), q.power_exponent(-ci), q.base)
        for form, ci in zip(system.forms_at(place), c.at(place))
    ]
    return max(terms)


def twisted_height(
    x: Sequence[RationalLike],
    system: LinearFormSystemQ,
    c: ExponentTuple,
    Q: Union[QPower, RationalLike],
) -> TwistedHeightValue:
    """``H_Q(x) = prod_v max_i |L_iv(x)|_v Q^-c_iv`` over the places of Q.

    Only the archimedean place, the places listed by the system or the
    exponents, and the primes dividing a coordinate or a form value can
    contribute a factor other than 1.

    Args:
        x: Nonzero rational vector of length ``n``.
        system: Linear forms.
        c: Exponents.
        Q: A rational ``Q >= 1`` or a ``QPower``.

    Returns:
        TwistedHeightValue: The exact height; ``real()`` gives an enclosure.

    Raises:
        InputError: For the zero vector or mismatched dimensions.
    """
    vector = [as_rational(v) for v in x]
    if len(vector) != system.n or c.n != system.n:
        raise InputError(f"expected vectors and exponents of length {system.n}")
    if all(v == 0 for v in vector):
        raise InputError("the twisted height of the zero vector is undefined")
    q = QPower.of(Q)
    value = TwistedHeightValue(Fraction(1), Fraction(0), q.base)
    for place in _places(vector, system, c):
        value = value * place_factor(vector, system, c, q, place)
    return value
