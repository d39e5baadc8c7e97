"""Tests for the formula registry."""

import pytest

from digit_complexity_lab.bounds import evaluate_bound, get_formula, list_formulas
from digit_complexity_lab.errors import InputError


def test_list_formulas() -> None:
    """Registration order, names and parameter lists."""
    formulas = {info.name: info for info in list_formulas()}
    assert list(formulas)[:2] == ["t1", "t2"]
    assert formulas["t2"].parameters == ["r", "delta"]
    assert "eta" in formulas


def test_evaluate_t2() -> None:
    """Enclosure, logarithm and parameter echo."""
    result = evaluate_bound("t2", {"r": "3", "delta": "1"})
    assert result.value == pytest.approx(3.506e7, rel=1e-3)
    assert result.log_value == pytest.approx(17.37, abs=0.01)
    assert result.parameters == {"r": "3", "delta": "1"}
    assert result.log_base == "e"
    assert result.exact is None
    assert float(result.lower) <= result.value <= float(result.upper)


def test_evaluate_exact_formula() -> None:
    """Integer results are echoed exactly."""
    result = evaluate_bound("m", {"r": "2", "delta": "1"})
    assert result.exact == "35490"


def test_evaluate_record_formula() -> None:
    """Record-valued formulas fill ``components``."""
    result = evaluate_bound("section7", {"v": "1/22", "d": "2", "log_t_N": "1000"})
    assert {"epsilon", "eta", "k", "kA1_plus_ok"} <= set(result.components)
    assert isinstance(result.components["k"], int)
    assert result.notes


def test_defaults_apply() -> None:
    """``c1`` defaults to 1 and the placeholder is noted."""
    result = evaluate_bound("theorem31_threshold", {"n": "1000000", "d": "2"})
    assert result.notes == list(get_formula("theorem31_threshold").notes)
    assert result.notes


@pytest.mark.parametrize(
    ("name", "raw", "message"),
    [
        ("t9", {}, "unknown formula"),
        ("t2", {"r": "3"}, "missing parameter delta"),
        ("t2", {"r": "3", "delta": "1", "n": "2"}, "unknown parameters n"),
        ("t2", {"r": "3/2", "delta": "1"}, "integer"),
        ("t2", {"r": "3", "delta": "x"}, "cannot parse"),
    ],
)
def test_evaluate_errors(name: str, raw: dict[str, str], message: str) -> None:
    """Bad names and parameters are input errors."""
    with pytest.raises(InputError, match=message):
        evaluate_bound(name, raw)
