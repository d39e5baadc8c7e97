"""Real algebraic numbers given by a minimal polynomial and an isolating interval."""

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Optional, Union

import structlog
import sympy

from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.arithmetic.reals import BigReal, dyadic_ceil, dyadic_floor
from digit_complexity_lab.errors import InputError

logger = structlog.get_logger(__name__)

_X = sympy.Symbol("X")
_TEXT_FORMAT = re.compile(r"^\s*\[([^\]]*)\]\s+(\S+)\s+(\S+)\s*$")

# Newton steps are only attempted once the bracket is this narrow.
NEWTON_WIDTH = Fraction(1, 16)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _horner(coefficients: tuple[int, ...], x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coefficients):
        value = value * x + c
    return value


def _rational_root_candidates(coefficients: tuple[int, ...]) -> list[Fraction]:
    constant, leading = coefficients[0], coefficients[-1]
    if constant == 0:
        return [Fraction(0)]
    candidates = set()
    for p in sympy.divisors(abs(constant)):
        for q in sympy.divisors(abs(leading)):
            candidates.add(Fraction(int(p), int(q)))
            candidates.add(Fraction(-int(p), int(q)))
    return sorted(candidates)


def normalize_coefficients(coefficients: list[int]) -> tuple[int, ...]:
    """Strip trailing zeros, divide out the content and make the leading term positive.

    Args:
        coefficients: Integer coefficients, constant term first.

    Returns:
        tuple[int, ...]: The primitive polynomial with positive leading term.

    Raises:
        InputError: For the zero polynomial or a constant.
    """
    coeffs = [int(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise InputError("a minimal polynomial must have degree at least 1")
    content = reduce(math.gcd, coeffs)
    sign = 1 if coeffs[-1] > 0 else -1
    return tuple(sign * c // content for c in coeffs)


@dataclass(frozen=True)
class AlgebraicReal:
    """A real root of a primitive squarefree integer polynomial.

    The interval ``(lo, hi)`` isolates the root: the polynomial changes sign
    across it, vanishes at neither endpoint and has exactly one real root
    inside. Irreducibility is screened by the rational root test only, so
    the degree is the degree of the supplied polynomial.
    """

    coefficients: tuple[int, ...]
    lo: Fraction
    hi: Fraction
    _bracket: list = field(default_factory=list, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.coefficients != normalize_coefficients(list(self.coefficients)):
            raise InputError(
                "coefficients must be primitive with positive leading term"
            )
        if not self.lo < self.hi:
            raise InputError("isolating interval must satisfy lo < hi")
        f_lo, f_hi = self.evaluate(self.lo), self.evaluate(self.hi)
        if f_lo == 0 or f_hi == 0:
            raise InputError("isolating interval endpoints must not be roots")
        if _sign(f_lo) == _sign(f_hi):
            raise InputError("polynomial does not change sign across the interval")
        if self.degree >= 2:
            if self.poly.gcd(self.poly.diff(_X)).degree() > 0:
                raise InputError("minimal polynomial is not squarefree")
            for candidate in _rational_root_candidates(self.coefficients):
                if self.evaluate(candidate) == 0:
                    raise InputError(
                        f"polynomial is reducible: it has the rational root {candidate}"
                    )
            roots_inside = self.poly.count_roots(
                sympy.Rational(self.lo.numerator, self.lo.denominator),
                sympy.Rational(self.hi.numerator, self.hi.denominator),
            )
            if roots_inside != 1:
                raise InputError(f"interval contains {roots_inside} roots, expected 1")
        self._bracket.extend([self.lo, self.hi])

    @classmethod
    def from_coefficients(
        cls,
        coefficients: list[int],
        lo: Union[int, Fraction, str],
        hi: Union[int, Fraction, str],
    ) -> "AlgebraicReal":
        """Build from raw coefficients (constant term first) and interval endpoints."""
        return cls(
            normalize_coefficients(coefficients), as_rational(lo), as_rational(hi)
        )

    @classmethod
    def rational(cls, value: Union[int, Fraction, str]) -> "AlgebraicReal":
        """The rational ``p/q`` as the root of ``qX - p``."""
        q = as_rational(value)
        return cls.from_coefficients([-q.numerator, q.denominator], q - 1, q + 1)

    @classmethod
    def parse(cls, text: str) -> "AlgebraicReal":
        """Parse ``[c0,c1,...] lo hi``; ``[-2,0,1] 1/1 3/2`` is the square root of 2.

        Raises:
            InputError: If the text does not follow the format.
        """
        match = _TEXT_FORMAT.match(text)
        if match is None:
            raise InputError(f"cannot parse algebraic number {text!r}")
        body, lo, hi = match.groups()
        try:
            coefficients = [int(c) for c in body.split(",") if c.strip()]
        except ValueError as e:
            raise InputError(f"non-integer coefficient in {text!r}") from e
        return cls.from_coefficients(coefficients, lo, hi)

    def to_text(self) -> str:
        """Inverse of ``parse``."""
        coeffs = ",".join(str(c) for c in self.coefficients)
        return f"[{coeffs}] {self.lo} {self.hi}"

    def spec_string(self) -> str:
        coeffs = ",".join(str(c) for c in self.coefficients)
        return f"algebraic:[{coeffs}]:{self.lo}:{self.hi}"

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def rational_value(self) -> Fraction:
        """The exact value of a degree-one number."""
        if not self.is_rational:
            raise InputError("number is irrational")
        return Fraction(-self.coefficients[0], self.coefficients[1])

    @cached_property
    def poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coefficients)), _X, domain="ZZ")

    @cached_property
    def _derivative(self) -> tuple[int, ...]:
        return tuple(i * c for i, c in enumerate(self.coefficients))[1:]

    def evaluate(self, x: Fraction) -> Fraction:
        """Exact value of the minimal polynomial at a rational point."""
        return _horner(self.coefficients, x)

    def refine(self, bits: int) -> tuple[Fraction, Fraction]:
        """Shrink the isolating interval to width at most ``2^-bits``.

        Bisection is combined with Newton steps whose result is accepted only
        after the sign change across the new bracket has been checked, so the
        root never leaves the interval.

        Args:
            bits: Requested accuracy.

        Returns:
            tuple[Fraction, Fraction]: Endpoints of an interval containing the
            root; both equal the root for rational numbers.
        """
        if self.is_rational:
            q = self.rational_value
            return q, q
        target = Fraction(1, 1 << bits) if bits >= 0 else Fraction(1 << -bits)
        lo, hi = self._bracket
        if hi - lo <= target:
            return lo, hi
        sign_lo = _sign(self.evaluate(lo))
        while hi - lo > target:
            narrowed = self._newton_bracket(lo, hi, sign_lo, target)
            if narrowed is not None:
                lo, hi = narrowed
                continue
            mid = (lo + hi) / 2
            if _sign(self.evaluate(mid)) == sign_lo:
                lo = mid
            else:
                hi = mid
        self._bracket[:] = [lo, hi]
        return lo, hi

    def _newton_bracket(
        self, lo: Fraction, hi: Fraction, sign_lo: int, target: Fraction
    ) -> Optional[tuple[Fraction, Fraction]]:
        width = hi - lo
        if width >= NEWTON_WIDTH:
            return None
        mid = (lo + hi) / 2
        slope = _horner(self._derivative, mid)
        if slope == 0:
            return None
        guess = mid - self.evaluate(mid) / slope
        if not lo < guess < hi:
            return None
        radius = max(width * width, target / 4)
        exponent = radius.numerator.bit_length() - radius.denominator.bit_length() - 1
        a = max(lo, dyadic_floor(guess - radius, exponent))
        b = min(hi, dyadic_ceil(guess + radius, exponent))
        if b - a >= width:
            return None
        if _sign(self.evaluate(a)) == sign_lo and _sign(self.evaluate(b)) == -sign_lo:
            return a, b
        return None

    def enclosure(self, bits: int) -> BigReal:
        """The root as a ``BigReal`` of width at most ``2^-bits``."""
        lo, hi = self.refine(bits)
        return BigReal(lo, hi, bits)

    def scale_by(self, m: int) -> "AlgebraicReal":
        """The number ``m * self`` with minimal polynomial ``m^d f(X/m)``.

        Raises:
            InputError: If ``m`` is zero.
        """
        if m == 0:
            raise InputError("scaling factor must be nonzero")
        d = self.degree
        scaled = [c * m ** (d - i) for i, c in enumerate(self.coefficients)]
        ends = sorted((self.lo * m, self.hi * m))
        return AlgebraicReal.from_coefficients(scaled, ends[0], ends[1])

    def translate(self, t: Union[int, Fraction, str]) -> "AlgebraicReal":
        """The number ``self + t``, root of ``f(X - t)`` cleared of denominators."""
        shift = as_rational(t)
        rational_poly = sympy.Poly(
            list(reversed(self.coefficients)), _X, domain="QQ"
        ).shift(-sympy.Rational(shift.numerator, shift.denominator))
        _, integral = rational_poly.clear_denoms(convert=True)
        coefficients = [int(c) for c in reversed(integral.all_coeffs())]
        return AlgebraicReal.from_coefficients(
            coefficients, self.lo + shift, self.hi + shift
        )
