"""Exact rationals and their absolute values at every place of Q.

Places are the archimedean place, written ``"inf"``, and the primes. The
p-adic absolute value is normalized so that ``|p|_p = 1/p``.
"""

from fractions import Fraction
from typing import Union

import sympy

from digit_complexity_lab.errors import InputError

INFINITY = "inf"

Place = Union[str, int]
RationalLike = Union[int, Fraction, str]


def as_rational(x: object) -> Fraction:
    """Convert integers, fractions, ``"p/q"`` strings and sympy rationals.

    Floats are refused: every value entering the exact layer must be exact.

    Args:
        x: Value to convert.

    Returns:
        Fraction: The value in lowest terms with positive denominator.

    Raises:
        InputError: For floats, booleans and unparsable input.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(f"expected an exact rational, got {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError as e:
            raise InputError(f"cannot parse rational {x!r}") from e
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    raise InputError(f"expected an exact rational, got {type(x).__name__}")


def parse_place(place: Place) -> Place:
    """Normalize a place given as ``"inf"``, a prime or a prime string.

    Raises:
        InputError: If the place is neither archimedean nor a prime.
    """
    if place == INFINITY:
        return INFINITY
    try:
        p = int(place)
    except (TypeError, ValueError) as e:
        raise InputError(f"unknown place {place!r}") from e
    require_prime(p)
    return p


def require_prime(p: int) -> None:
    """Reject anything that is not a prime number.

    Raises:
        InputError: If ``p`` is not prime.
    """
    if isinstance(p, bool) or not isinstance(p, int) or not sympy.isprime(p):
        raise InputError(f"{p!r} is not a prime")


def padic_valuation(x: RationalLike, p: int) -> int:
    """Return the exponent of ``p`` in the nonzero rational ``x``."""
    require_prime(p)
    value = as_rational(x)
    if value == 0:
        raise InputError("the valuation of 0 is infinite")
    return int(sympy.multiplicity(p, abs(value.numerator))) - int(
        sympy.multiplicity(p, value.denominator)
    )


def padic_abs(x: RationalLike, p: int) -> Fraction:
    """Normalized p-adic absolute value ``p^(-v_p(x))``, with ``|0|_p = 0``.

    Args:
        x: Rational argument.
        p: Prime.

    Returns:
        Fraction: Exact absolute value.

    Raises:
        InputError: If ``p`` is not prime.
    """
    require_prime(p)
    value = as_rational(x)
    if value == 0:
        return Fraction(0)
    return Fraction(p) ** -padic_valuation(value, p)


def place_abs(x: RationalLike, place: Place) -> Fraction:
    """Absolute value of ``x`` at an archimedean or p-adic place."""
    if place == INFINITY:
        return abs(as_rational(x))
    return padic_abs(x, int(place))


def support_primes(*values: RationalLike) -> list[int]:
    """Primes dividing a numerator or denominator of any of the values."""
    primes: set[int] = set()
    for value in values:
        q = as_rational(value)
        for part in (q.numerator, q.denominator):
            if part not in (0, 1, -1):
                primes.update(sympy.primefactors(part))
    return sorted(primes)


def product_formula_check(x: RationalLike) -> Fraction:
    """Multiply ``|x|_v`` over the archimedean place and all relevant primes.

    Only primes dividing the numerator or denominator contribute a factor
    different from 1, so the product is finite and exact.

    Args:
        x: Nonzero rational.

    Returns:
        Fraction: The product, which equals 1 for every nonzero rational.

    Raises:
        InputError: If ``x`` is zero.
    """
    value = as_rational(x)
    if value == 0:
        raise InputError("the product formula is undefined at 0")
    product = abs(value)
    for p in support_primes(value):
        product *= padic_abs(value, p)
    return product
