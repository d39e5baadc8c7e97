"""Multihomogeneous polynomials in blocks of two variables and their index.

A polynomial is multihomogeneous of degree ``r = (r_1, ..., r_m)`` when each
monomial has total degree ``r_h`` in the block ``(X_h1, X_h2)``. Its index at
points ``x_1, ..., x_m`` is the least weight ``sum_h (i_h1 + i_h2) / r_h``
of a derivative that does not vanish there.
"""

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import structlog
import sympy

from digit_complexity_lab.arithmetic.rationals import RationalLike, as_rational
from digit_complexity_lab.errors import InputError

logger = structlog.get_logger(__name__)

Exponents = tuple[int, ...]
BlockPoint = tuple[Fraction, Fraction]


def block_symbols(m: int) -> list[sympy.Symbol]:
    """``X_11, X_12, ..., X_m1, X_m2`` in block order."""
    return [sympy.Symbol(f"X{h}{k}") for h in range(1, m + 1) for k in (1, 2)]


def _to_sympy(q: Fraction) -> sympy.Rational:
    return sympy.Rational(q.numerator, q.denominator)


@dataclass(frozen=True)
class MultiHomPolynomial:
    """Coefficients keyed by exponent tuples ``(i_11, i_12, ..., i_m1, i_m2)``."""

    degrees: tuple[int, ...]
    coefficients: Mapping[Exponents, Fraction]

    def __post_init__(self) -> None:
        if not self.degrees or any(r < 1 for r in self.degrees):
            raise InputError("block degrees must be positive")
        for exponents in self.coefficients:
            if len(exponents) != 2 * self.m:
                raise InputError(
                    f"monomial {exponents} does not have {self.m} blocks"
                )
            for h, r in enumerate(self.degrees):
                if exponents[2 * h] + exponents[2 * h + 1] != r:
                    raise InputError(
                        f"monomial {exponents} has degree other than {r} "
                        f"in block {h + 1}"
                    )

    @classmethod
    def of(
        cls,
        degrees: Sequence[int],
        coefficients: Mapping[Exponents, RationalLike],
    ) -> "MultiHomPolynomial":
        return cls(
            tuple(degrees),
            {
                tuple(e): as_rational(c)
                for e, c in coefficients.items()
                if as_rational(c) != 0
            },
        )

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @cached_property
    def poly(self) -> sympy.Poly:
        symbols = block_symbols(self.m)
        terms = {e: _to_sympy(c) for e, c in self.coefficients.items()}
        return sympy.Poly.from_dict(terms or {(0,) * len(symbols): 0}, *symbols)

    def __mul__(self, other: "MultiHomPolynomial") -> "MultiHomPolynomial":
        if other.m != self.m:
            raise InputError("products need the same number of blocks")
        product = self.poly * other.poly
        degrees = tuple(a + b for a, b in zip(self.degrees, other.degrees))
        return MultiHomPolynomial.of(
            degrees, {e: as_rational(c) for e, c in product.terms()}
        )

    def value(self, points: Sequence[BlockPoint]) -> Fraction:
        return _evaluate(self.poly, self.m, points)


def _substitution(m: int, points: Sequence[BlockPoint]) -> dict:
    symbols = block_symbols(m)
    values = [_to_sympy(v) for point in points for v in point]
    return dict(zip(symbols, values))


def _evaluate(poly: sympy.Poly, m: int, points: Sequence[BlockPoint]) -> Fraction:
    return as_rational(sympy.Rational(poly.as_expr().subs(_substitution(m, points))))


def _check_points(m: int, points: Sequence[Sequence[RationalLike]]) -> list[BlockPoint]:
    if len(points) != m:
        raise InputError(f"expected {m} points")
    checked = []
    for point in points:
        if len(point) != 2:
            raise InputError("points must have two coordinates")
        a, b = as_rational(point[0]), as_rational(point[1])
        if a == 0 and b == 0:
            raise InputError("points must be nonzero")
        checked.append((a, b))
    return checked


def derivative_orders(
    degrees: Sequence[int], weights: Sequence[int] = ()
) -> list[tuple[Fraction, Exponents]]:
    """All orders ``i`` with ``i_h1 + i_h2 <= degrees[h]`` by increasing weight.

    The weight of an order is ``sum_h (i_h1 + i_h2) / weights[h]``; ``weights``
    defaults to ``degrees``. Orders past the block degrees of a polynomial
    annihilate it, so ``degrees`` bounds the search and ``weights`` only ranks.
    """
    ranks = tuple(weights) if weights else tuple(degrees)
    per_block = [
        [(i, j) for i in range(r + 1) for j in range(r + 1 - i)] for r in degrees
    ]
    orders = []
    for choice in itertools.product(*per_block):
        weight = sum(
            (Fraction(i + j, r) for (i, j), r in zip(choice, ranks)), Fraction(0)
        )
        orders.append((weight, tuple(v for pair in choice for v in pair)))
    orders.sort()
    return orders


def index(
    P: MultiHomPolynomial,
    points: Sequence[Sequence[RationalLike]],
    degrees: Sequence[int] = (),
) -> Fraction:
    """Index of ``P`` at the points with respect to the degree tuple.

    Derivative orders up to the block degrees of ``P`` are tried by increasing
    weight and the first one whose value at the points is nonzero gives the
    index. One exists for every nonzero ``P``: the order of any of its
    monomials leaves a nonzero constant.

    Args:
        P: Nonzero multihomogeneous polynomial.
        points: ``m`` nonzero rational pairs.
        degrees: Positive weights ``r``; the degrees of ``P`` by default.

    Returns:
        Fraction: The index; at most ``m`` when the weights are the degrees of
        ``P``.

    Raises:
        InputError: For the zero polynomial, malformed weights or points.
    """
    if P.is_zero:
        raise InputError("the zero polynomial has no index")
    weights = tuple(degrees) if degrees else P.degrees
    if len(weights) != P.m:
        raise InputError(f"expected {P.m} weights")
    if any(r < 1 for r in weights):
        raise InputError("weights must be positive")
    at = _check_points(P.m, points)
    gens = list(range(2 * P.m))
    for weight, order in derivative_orders(P.degrees, weights):
        specs = [(g, k) for g, k in zip(gens, order) if k]
        derivative = P.poly.diff(*specs) if specs else P.poly
        if derivative.is_zero:
            continue
        if _evaluate(derivative, P.m, at) != 0:
            logger.debug("index_found", weight=str(weight), order=order)
            return weight
    raise AssertionError("a nonzero polynomial has a nonvanishing derivative")
