"""Tests for linear-form systems and exponent tuples."""

import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from digit_complexity_lab.arithmetic.rationals import INFINITY
from digit_complexity_lab.errors import InputError
from digit_complexity_lab.twisted import (
    ExponentTuple,
    LinearFormSystemQ,
    determinant,
    load_system,
    random_system,
)

SYSTEM_JSON = {
    "n": 2,
    "forms": {"inf": [[1, "-1/2"], [0, 1]]},
    "c": {"inf": ["1/2", "-1/2"]},
    "r": 4,
}


def test_load_system_from_text_and_file(tmp_path: Path) -> None:
    """JSON text and files describe the same system."""
    system, c = load_system(json.dumps(SYSTEM_JSON))
    assert system.places == [INFINITY]
    assert c.at(INFINITY) == (Fraction(1, 2), Fraction(-1, 2))
    assert c.at(3) == (0, 0)
    path = tmp_path / "system.json"
    path.write_text(json.dumps(SYSTEM_JSON))
    from_file, _ = load_system(path)
    assert from_file == system


def test_script_h() -> None:
    """``X1 - X2/2`` and ``X2`` with the coordinate forms: the 2-adic factor is 2."""
    system, _ = load_system(json.dumps(SYSTEM_JSON))
    assert len(system.distinct_forms) == 3
    assert system.script_H() == 2
    assert system.rank_bound == 4


@pytest.mark.parametrize(
    ("description", "message"),
    [
        ({"n": 2, "forms": {"inf": [[2, 0], [0, 1]]}}, "determinant"),
        ({"n": 2, "forms": {"inf": [[1, 0]]}}, "expected 2 forms"),
        ({"n": 2, "forms": {"inf": [[1, 1], [0, 1]]}, "r": 2}, "exceed r"),
        ({"n": 2, "c": {"inf": ["1/2", "1/2"]}}, "sum"),
        ({"n": 2, "c": {"inf": [1, -1], "2": [1, -1]}}, "column maxima"),
        ({"n": 1}, "invalid system"),
        ({"n": 2, "forms": {"4": [[1, 0], [0, 1]]}}, "prime"),
    ],
)
def test_invalid_descriptions(description: dict, message: str) -> None:
    """Every construction check names what failed."""
    with pytest.raises(InputError, match=message):
        load_system(json.dumps(description))


def test_malformed_json() -> None:
    """Unparsable text is an input error."""
    with pytest.raises(InputError):
        load_system("{not json")


def test_random_systems_are_valid() -> None:
    """Random systems pass construction and have admissible exponents."""
    rng = np.random.default_rng(3)
    for _ in range(20):
        system, c = random_system(rng)
        assert c.total == 0
        assert c.column_max_sum <= 1
        for place in system.places:
            assert determinant(system.forms_at(place)) == 1


def test_exponent_tuple_zero() -> None:
    """The zero tuple is admissible everywhere."""
    zero = ExponentTuple.zero(3)
    assert zero.at(INFINITY) == (0, 0, 0)
    assert zero.places == []
    assert LinearFormSystemQ.identity(3).script_H() == 1
