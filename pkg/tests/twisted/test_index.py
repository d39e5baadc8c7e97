"""Tests for the index and the Roth's Lemma checker."""

import itertools
import random
from fractions import Fraction

import pytest
import sympy

from digit_complexity_lab.errors import InputError
from digit_complexity_lab.twisted import (
    MultiHomPolynomial,
    derivative_orders,
    index,
    polynomial_height,
    roth_lemma_check,
)
from digit_complexity_lab.twisted.index import block_symbols

DETERMINANT = MultiHomPolynomial.of((1, 1), {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1})
AXIS = [(1, 0), (1, 0)]
ROTH_POINTS = [(1, 10**71), (1, 10**563)]
ROTH_P = MultiHomPolynomial.of((8, 1), {(8, 0, 1, 0): 1})
RANDOM_SEED = 2024
RANDOM_POLYNOMIALS = 100
RANDOM_PRODUCTS = 30


def test_index_of_determinant() -> None:
    """``X11 X22 - X12 X21`` vanishes on the diagonal to weight 1."""
    assert index(DETERMINANT, AXIS) == 1
    assert index(DETERMINANT, [(1, 0), (0, 1)]) == 0


def test_index_of_square() -> None:
    """``X11^2`` at ``(0, 1)`` needs the second derivative."""
    square = MultiHomPolynomial.of((2,), {(2, 0): 1})
    assert index(square, [(0, 1)]) == 1
    assert index(square, [(1, 5)]) == 0


def test_index_is_additive() -> None:
    """``ind(P P') = ind(P) + ind(P')`` for common weights."""
    other = MultiHomPolynomial.of((1, 1), {(0, 1, 0, 1): 1})
    weights = (2, 2)
    product = DETERMINANT * other
    assert product.degrees == (2, 2)
    assert index(DETERMINANT, AXIS, weights) == Fraction(1, 2)
    assert index(other, AXIS, weights) == 1
    assert index(product, AXIS, weights) == Fraction(3, 2)


def test_derivative_orders() -> None:
    """Orders come by increasing weight."""
    orders = derivative_orders((1,))
    assert [w for w, _ in orders] == [0, 1, 1]
    assert orders[0] == (0, (0, 0))
    ranked = derivative_orders((2,), (1,))
    assert ranked[-1][0] == 2
    assert len(ranked) == 6


def test_polynomial_validation() -> None:
    """Monomials must have the block degrees; the zero polynomial has no index."""
    with pytest.raises(InputError):
        MultiHomPolynomial.of((1, 1), {(1, 1, 0, 1): 1})
    with pytest.raises(InputError):
        index(MultiHomPolynomial.of((1,), {(1, 0): 0}), [(1, 0)])
    with pytest.raises(InputError):
        index(DETERMINANT, [(0, 0), (1, 0)])


def test_polynomial_height() -> None:
    """``H_2`` of the coefficient vector ``(3, 4)``."""
    P = MultiHomPolynomial.of((1,), {(1, 0): 3, (0, 1): 4})
    assert float(polynomial_height(P)) == pytest.approx(5)


def test_roth_lemma_holds_on_constructed_instance() -> None:
    """Both hypotheses hold and the index is below ``m theta``."""
    report = roth_lemma_check(ROTH_P, (8, 1), ROTH_POINTS, 1)
    assert report.hypotheses_hold
    assert report.index is not None
    assert report.index < 2
    assert report.conclusion_holds
    assert report.passed


def test_roth_degree_ratio_violation() -> None:
    """Equal degrees violate the ratio hypothesis."""
    P = MultiHomPolynomial.of((1, 1), {(1, 0, 1, 0): 1})
    report = roth_lemma_check(P, (1, 1), ROTH_POINTS, 1)
    assert report.ratio_violations == [1]
    assert report.index is None
    assert report.passed
    assert "degree-ratio" in report.messages[0]


def test_roth_point_height_violation() -> None:
    """A second point of smaller height fails the height hypothesis."""
    report = roth_lemma_check(ROTH_P, (8, 1), [(1, 10**71), (1, 10**500)], 1)
    assert report.height_violations == [2]
    assert not report.hypotheses_hold


def test_roth_arguments() -> None:
    """``m >= 2``, ``0 < theta <= 1`` and matching degrees."""
    single = MultiHomPolynomial.of((1,), {(1, 0): 1})
    with pytest.raises(InputError):
        roth_lemma_check(single, (1,), [(1, 0)], 1)
    with pytest.raises(InputError):
        roth_lemma_check(ROTH_P, (8, 1), ROTH_POINTS, 0)
    with pytest.raises(InputError):
        roth_lemma_check(ROTH_P, (4, 1), ROTH_POINTS, 1)


def test_index_with_weights_below_the_degree() -> None:
    """Weights smaller than the block degree still yield a finite index."""
    square = MultiHomPolynomial.of((2,), {(2, 0): 1})
    assert index(square, [(0, 1)], (1,)) == 2
    assert index(DETERMINANT, AXIS, (1, 3)) == Fraction(1, 3)
    with pytest.raises(InputError):
        index(square, [(0, 1)], (0,))


def _taylor_index(
    P: MultiHomPolynomial, points: list[tuple[int, int]], weights: tuple[int, ...]
) -> Fraction:
    """Least weight of a monomial of ``P(x + Y)`` with a nonzero coefficient."""
    symbols = block_symbols(P.m)
    shift = {
        s: s + value for s, value in zip(symbols, [v for p in points for v in p])
    }
    shifted = sympy.Poly(P.poly.as_expr().xreplace(shift), *symbols)
    return min(
        sum(
            (Fraction(e[2 * h] + e[2 * h + 1], r) for h, r in enumerate(weights)),
            Fraction(0),
        )
        for e, c in shifted.terms()
        if c != 0
    )


def _random_polynomial(
    rng: random.Random, degrees: tuple[int, ...]
) -> MultiHomPolynomial:
    blocks = [[(i, r - i) for i in range(r + 1)] for r in degrees]
    coefficients = {
        tuple(v for pair in choice for v in pair): rng.randint(-3, 3)
        for choice in itertools.product(*blocks)
        if rng.random() < 0.6
    }
    if not any(coefficients.values()):
        coefficients[tuple(v for r in degrees for v in (r, 0))] = 1
    return MultiHomPolynomial.of(degrees, coefficients)


def _vanishing_factor(
    points: list[tuple[int, int]], powers: tuple[int, ...]
) -> MultiHomPolynomial:
    """``prod_h (b_h X_h1 - a_h X_h2)^k_h``, zero to order ``k_h`` at the points."""
    symbols = block_symbols(len(points))
    product = sympy.Integer(1)
    for h, ((a, b), k) in enumerate(zip(points, powers)):
        product *= (b * symbols[2 * h] - a * symbols[2 * h + 1]) ** k
    terms = sympy.Poly(product, *symbols).terms()
    return MultiHomPolynomial.of(powers, {e: int(c) for e, c in terms})


def _random_instance(
    rng: random.Random,
) -> tuple[MultiHomPolynomial, list[tuple[int, int]], tuple[int, ...]]:
    m = rng.randint(1, 3)
    points = []
    for _ in range(m):
        point = (rng.randint(-2, 2), rng.randint(-2, 2))
        points.append(point if point != (0, 0) else (1, 0))
    powers = tuple(rng.randint(1, 2) for _ in range(m))
    cofactor = _random_polynomial(rng, tuple(rng.randint(1, 2) for _ in range(m)))
    weights = tuple(rng.randint(1, 4) for _ in range(m))
    return cofactor * _vanishing_factor(points, powers), points, weights


@pytest.mark.slow
@pytest.mark.exact
def test_index_matches_taylor_expansion() -> None:
    """The derivative search agrees with the lowest Taylor term at the points."""
    rng = random.Random(RANDOM_SEED)
    for _ in range(RANDOM_POLYNOMIALS):
        P, points, weights = _random_instance(rng)
        assert index(P, points, weights) == _taylor_index(P, points, weights)


@pytest.mark.slow
@pytest.mark.exact
def test_index_is_additive_on_random_products() -> None:
    """``ind(P Q) = ind(P) + ind(Q)`` at shared points and weights."""
    rng = random.Random(RANDOM_SEED + 1)
    for _ in range(RANDOM_PRODUCTS):
        P, points, weights = _random_instance(rng)
        Q = _random_polynomial(rng, tuple(rng.randint(1, 2) for _ in points))
        Q = Q * _vanishing_factor(points, tuple(1 for _ in points))
        assert index(P * Q, points, weights) == index(P, points, weights) + index(
            Q, points, weights
        )
