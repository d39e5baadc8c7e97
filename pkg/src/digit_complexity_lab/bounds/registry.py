"""Name registry of the bound formulas.

Each formula is registered with typed parameters so the command line and
the HTTP surface can evaluate it from ``key=value`` strings.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Union

import structlog
from mpmath import libmp

from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    current_log_base,
    current_precision,
)
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.metrics import get_lab_metrics
from digit_complexity_lab.models import BoundResult, FormulaInfo

from . import appendix, formulas, section7

logger = structlog.get_logger(__name__)

DISPLAY_DIGITS = 12

Scalar = Union[BigReal, int, Fraction, bool]


@dataclass(frozen=True)
class Parameter:
    name: str
    kind: str = "rational"
    default: Optional[str] = None

    def parse(self, raw: str) -> Union[int, Fraction]:
        value = as_rational(raw)
        if self.kind == "int":
            if value.denominator != 1:
                raise InputError(f"{self.name} must be an integer, got {raw!r}")
            return int(value)
        return value


@dataclass(frozen=True)
class BoundFormula:
    name: str
    function: Callable[..., Any]
    parameters: tuple[Parameter, ...]
    description: str
    notes: tuple[str, ...] = field(default_factory=tuple)

    def info(self) -> FormulaInfo:
        return FormulaInfo(
            name=self.name,
            parameters=[p.name for p in self.parameters],
            description=self.description,
        )


def _int(name: str, default: Optional[str] = None) -> Parameter:
    return Parameter(name, "int", default)


def _rat(name: str, default: Optional[str] = None) -> Parameter:
    return Parameter(name, "rational", default)


def _section7(v: Fraction, d: int, log_t_N: Fraction) -> dict[str, Scalar]:
    params = section7.section7_params(v, d, log_t_N=log_t_N)
    return {
        "epsilon": params.epsilon,
        "eta": params.eta,
        "k": params.k,
        "A1_plus": params.A1_plus,
        "A1_minus": params.A1_minus,
        "kA1_plus": params.kA1_plus,
        "kA1_minus": params.kA1_minus,
        "target": params.target,
        "kA1_plus_ok": params.kA1_plus_ok,
        "kA1_minus_ok": params.kA1_minus_ok,
        "k0_bound": params.k0_bound,
    }


def _appendix(r: int, delta: Fraction, calH: Fraction) -> dict[str, Scalar]:
    constants = appendix.appendix_constants(r, delta, calH)
    return {
        "m": constants.m,
        "log_C": constants.log_C,
        "log_C_prime": constants.log_C_prime,
        "t2": constants.t2,
        "t4": constants.t4,
        "t5": constants.t5,
    }


_FORMULAS = [
    BoundFormula(
        "t1",
        formulas.t1,
        (_int("n"), _int("r"), _rat("delta")),
        "Exceptional subspaces of the parametric subspace theorem",
    ),
    BoundFormula(
        "t2",
        formulas.t2,
        (_int("r"), _rat("delta")),
        "Two-dimensional exceptional subspace count",
    ),
    BoundFormula(
        "theorem51_count",
        formulas.theorem51_count,
        (_int("n"), _int("R"), _int("D"), _rat("epsilon")),
        "Subspaces containing the large solutions of a system of inequalities",
    ),
    BoundFormula(
        "theorem51_threshold",
        formulas.theorem51_threshold,
        (_int("n"), _rat("H"), _rat("epsilon")),
        "Size above which solutions are counted",
    ),
    BoundFormula(
        "cor52_count",
        formulas.cor52_count,
        (_int("d"), _rat("epsilon")),
        "Lines containing the large rational approximations of degree-d numbers",
    ),
    BoundFormula(
        "cor52_threshold",
        formulas.cor52_threshold,
        (_rat("H_xi"), _rat("epsilon")),
        "Denominator size above which approximations are counted",
    ),
    BoundFormula(
        "B",
        formulas.B_of,
        (_int("d"), _rat("epsilon")),
        "Approximation count at half the exponent excess",
    ),
    BoundFormula(
        "lemma81_count",
        formulas.lemma81_count,
        (_int("d"), _rat("epsilon")),
        "Large run-length jumps of a digit expansion",
        ("explicit sufficient constant, not an optimal one",),
    ),
    BoundFormula(
        "theorem31_threshold",
        formulas.theorem31_threshold,
        (_int("n"), _int("d"), _rat("c1", "1")),
        "Lower bound shape for the number of digit changes",
        ("c1 is not known explicitly; the default 1 is a placeholder",),
    ),
    BoundFormula(
        "hadamard_bound",
        formulas.hadamard_bound,
        (_int("n"), _int("r"), _rat("H")),
        "Upper bound n^(n/2) H^r for the height of a form system",
    ),
    BoundFormula(
        "cugiani_epsilon",
        formulas.cugiani_epsilon,
        (_int("m"), _rat("c"), _rat("y")),
        "Decaying approximation exponent of the iterated-log theorem",
    ),
    BoundFormula(
        "m",
        appendix.m_of,
        (_int("r"), _rat("delta")),
        "Number of blocks in the auxiliary polynomial",
    ),
    BoundFormula(
        "log_C",
        appendix.log_C,
        (_int("r"), _rat("delta"), _rat("calH")),
        "Logarithm of the large-Q constant of the two-dimensional theorem",
    ),
    BoundFormula(
        "t3",
        appendix.t3,
        (_rat("A"), _rat("B"), _rat("delta")),
        "Gap-principle windows covering [A, B]",
    ),
    BoundFormula(
        "t4",
        appendix.t4,
        (_int("m"), _rat("delta")),
        "Exceptional subspaces above the constant C",
    ),
    BoundFormula(
        "t5",
        appendix.t5,
        (_int("r"), _rat("delta"), _rat("calH")),
        "Gap-principle windows below the constant C",
    ),
    BoundFormula(
        "appendix",
        _appendix,
        (_int("r"), _rat("delta"), _rat("calH", "1")),
        "All constants of the two-dimensional theorem",
    ),
    BoundFormula(
        "eta",
        section7.solve_eta,
        (_rat("v"),),
        "Root of (11 + 2 eta)(v + eta) + eta = 1",
    ),
    BoundFormula(
        "section7",
        _section7,
        (_rat("v"), _int("d"), _rat("log_t_N")),
        "Shift-argument parameters for a decay rate v and shift size t_N",
        ("A1 is reported with both signs of its exponent",),
    ),
]

REGISTRY: dict[str, BoundFormula] = {f.name: f for f in _FORMULAS}


def list_formulas() -> list[FormulaInfo]:
    """Registered formulas in registration order."""
    return [f.info() for f in _FORMULAS]


def get_formula(name: str) -> BoundFormula:
    """Look up a formula by name.

    Raises:
        InputError: For unknown names.
    """
    try:
        return REGISTRY[name]
    except KeyError as e:
        known = ", ".join(REGISTRY)
        raise InputError(f"unknown formula {name!r}; known: {known}") from e


def format_decimal(x: Fraction, digits: int = DISPLAY_DIGITS) -> str:
    """Decimal rendering of a rational with ``digits`` significant digits."""
    raw = libmp.from_rational(x.numerator, x.denominator, 4 * digits + 16)
    return libmp.to_str(raw, digits)


def _float_or_none(x: Fraction) -> Optional[float]:
    try:
        return float(x)
    except OverflowError:
        return None


def _log_value(value: BigReal) -> Optional[float]:
    if value.lo <= 0:
        return None
    return _float_or_none(value.log().midpoint)


def _component(value: Scalar) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    real = value if isinstance(value, BigReal) else BigReal.exact(value)
    if real.is_exact:
        return str(real.lo)
    return {
        "value": _float_or_none(real.midpoint),
        "lower": format_decimal(real.lo),
        "upper": format_decimal(real.hi),
    }


def _parse(formula: BoundFormula, raw: Mapping[str, str]) -> dict[str, Any]:
    expected = {p.name for p in formula.parameters}
    unknown = sorted(set(raw) - expected)
    if unknown:
        raise InputError(f"{formula.name}: unknown parameters {', '.join(unknown)}")
    values: dict[str, Any] = {}
    for parameter in formula.parameters:
        text = raw.get(parameter.name, parameter.default)
        if text is None:
            raise InputError(f"{formula.name}: missing parameter {parameter.name}")
        values[parameter.name] = parameter.parse(text)
    return values


def evaluate_bound(name: str, raw: Mapping[str, str]) -> BoundResult:
    """Evaluate a registered formula from string parameters.

    Args:
        name: Registered formula name.
        raw: Parameter strings by name, e.g. ``{"r": "3", "delta": "1"}``.

    Returns:
        BoundResult: Enclosure, logarithm and parameter echo. Record-valued
        formulas put their quantities under ``components``.

    Raises:
        InputError: For unknown formulas, unknown or missing parameters and
            values outside a formula's domain.
    """
    formula = get_formula(name)
    kwargs = _parse(formula, raw)
    outcome = formula.function(**kwargs)
    get_lab_metrics().bound_evaluations.labels(formula=name).inc()
    components: dict[str, Any] = {}
    if isinstance(outcome, dict):
        components = {key: _component(v) for key, v in outcome.items()}
        outcome = next(v for v in outcome.values() if isinstance(v, BigReal))
    value = outcome if isinstance(outcome, BigReal) else BigReal.exact(outcome)
    result = BoundResult(
        formula=name,
        value=_float_or_none(value.midpoint),
        lower=format_decimal(value.lo),
        upper=format_decimal(value.hi),
        log_value=_log_value(value),
        exact=str(value.lo) if value.is_exact else None,
        components=components,
        parameters={key: str(v) for key, v in raw.items()},
        log_base=current_log_base(),
        precision_bits=current_precision(),
        notes=list(formula.notes),
    )
    logger.info("bound_evaluated", formula=name, value=result.value)
    return result
