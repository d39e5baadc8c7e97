"""Heights of algebraic numbers, rational linear forms and rational vectors."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import structlog
import sympy

from digit_complexity_lab.algebraic.numbers import AlgebraicReal
from digit_complexity_lab.arithmetic.rationals import (
    RationalLike,
    as_rational,
    padic_abs,
    support_primes,
)
from digit_complexity_lab.arithmetic.reals import (
    GUARD_BITS,
    BigReal,
    current_precision,
)
from digit_complexity_lab.errors import InputError

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class RationalLinearForm:
    """A linear form ``sum a_i X_i`` with rational coefficients."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise InputError("a linear form needs at least one coefficient")
        if all(c == 0 for c in self.coefficients):
            raise InputError("the zero form has no height")

    @classmethod
    def of(cls, *coefficients: RationalLike) -> "RationalLinearForm":
        return cls(tuple(as_rational(c) for c in coefficients))

    @classmethod
    def coordinate(cls, i: int, n: int) -> "RationalLinearForm":
        """The coordinate form ``X_{i+1}`` in dimension ``n``."""
        return cls(tuple(Fraction(int(j == i)) for j in range(n)))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: Sequence[RationalLike]) -> Fraction:
        if len(x) != self.dimension:
            raise InputError(f"expected a vector of length {self.dimension}")
        return sum(
            (c * as_rational(v) for c, v in zip(self.coefficients, x)), Fraction(0)
        )


def _interval_modulus_squared(
    lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    squares = (lo * lo, hi * hi)
    if lo <= 0 <= hi:
        return Fraction(0), max(squares)
    return min(squares), max(squares)


def _clamp(value: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return min(max(value, lo), hi)


def _rectangle_modulus_squared(
    corner_lo: sympy.Expr, corner_hi: sympy.Expr
) -> tuple[Fraction, Fraction]:
    u, v = as_rational(sympy.re(corner_lo)), as_rational(sympy.im(corner_lo))
    s, t = as_rational(sympy.re(corner_hi)), as_rational(sympy.im(corner_hi))
    near_x, near_y = _clamp(Fraction(0), u, s), _clamp(Fraction(0), v, t)
    far = max(x * x + y * y for x in (u, s) for y in (v, t))
    return near_x * near_x + near_y * near_y, far


def mahler_measure_squared(x: AlgebraicReal) -> BigReal:
    """Enclosure of ``M(f)^2`` from certified enclosures of every complex root.

    Real roots come as isolating intervals and non-real roots as isolating
    rectangles from sympy's root isolation, refined to the working precision.
    Working with squared moduli keeps the enclosure rational.
    """
    bits = current_precision() + GUARD_BITS
    eps = sympy.Rational(1, 1 << bits)
    real_roots, complex_roots = x.poly.intervals(all=True, eps=eps, sqf=True)
    enclosures = [
        _interval_modulus_squared(as_rational(s), as_rational(t))
        for s, t in real_roots
    ]
    # Some sympy versions list only one root of each conjugate pair.
    multiplicity = 2 if len(real_roots) + 2 * len(complex_roots) == x.degree else 1
    for corner_lo, corner_hi in complex_roots:
        bounds = _rectangle_modulus_squared(corner_lo, corner_hi)
        enclosures.extend([bounds] * multiplicity)
    if len(enclosures) != x.degree:
        raise InputError("root isolation did not return every root")
    leading = Fraction(x.coefficients[-1])
    lower, upper = leading * leading, leading * leading
    for low, high in enclosures:
        lower *= max(Fraction(1), low)
        upper *= max(Fraction(1), high)
    return BigReal(lower, upper, current_precision())


def height(x: AlgebraicReal) -> BigReal:
    """Absolute multiplicative height ``H(x) = M(f)^(1/d)``.

    Args:
        x: Algebraic number; its polynomial is taken to be minimal.

    Returns:
        BigReal: Exact for rationals, where ``H(p/q) = max(|p|, |q|)``.
    """
    if x.is_rational:
        q = x.rational_value
        return BigReal.exact(max(abs(q.numerator), q.denominator))
    return mahler_measure_squared(x).root(2 * x.degree)


def inhom_height(form: RationalLinearForm) -> BigReal:
    """Inhomogeneous height ``prod_v max(1, |a_1|_v, ..., |a_n|_v)``.

    The product runs over the archimedean place and the primes dividing some
    coefficient; every other place contributes 1. The result is exact.
    """
    value = max([Fraction(1)] + [abs(c) for c in form.coefficients])
    for p in support_primes(*form.coefficients):
        value *= max([Fraction(1)] + [padic_abs(c, p) for c in form.coefficients])
    return BigReal.exact(value)


def euclidean_height(x: Sequence[RationalLike]) -> BigReal:
    """Euclidean height: archimedean 2-norm times ``prod_p max_i |x_i|_p``.

    Raises:
        InputError: For the zero vector.
    """
    vector = [as_rational(v) for v in x]
    if all(v == 0 for v in vector):
        raise InputError("the zero vector has no height")
    finite = Fraction(1)
    for p in support_primes(*[v for v in vector if v != 0]):
        finite *= max(padic_abs(v, p) for v in vector)
    norm_squared = sum((v * v for v in vector), Fraction(0))
    return BigReal.exact(norm_squared * finite * finite).sqrt()
