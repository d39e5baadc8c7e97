"""Exact arithmetic: rationals, p-adic absolute values and certified reals."""

from digit_complexity_lab.arithmetic.positional import digits_to_int, int_to_digits
from digit_complexity_lab.arithmetic.rationals import (
    INFINITY,
    Place,
    as_rational,
    padic_abs,
    padic_valuation,
    place_abs,
    product_formula_check,
)
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    certify,
    coerce_real,
    eval_context,
    iterated_exp,
    iterated_log,
    ln,
    log,
    maximum,
)

__all__ = [
    "INFINITY",
    "BigReal",
    "Place",
    "as_rational",
    "certify",
    "coerce_real",
    "digits_to_int",
    "eval_context",
    "int_to_digits",
    "iterated_exp",
    "iterated_log",
    "ln",
    "log",
    "maximum",
    "padic_abs",
    "padic_valuation",
    "place_abs",
    "product_formula_check",
]
