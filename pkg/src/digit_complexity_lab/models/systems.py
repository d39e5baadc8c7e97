"""Models for JSON descriptions of linear-form systems and exponent tuples."""

from typing import Optional, Union

from pydantic import BaseModel, Field

Coefficient = Union[int, str]


class SystemDescription(BaseModel):
    """Forms and exponents per place; places are ``"inf"`` or prime strings.

    Places missing from ``forms`` carry the coordinate forms; places missing
    from ``c`` carry zero exponents.
    """

    n: int = Field(
        ...,
        ge=2,
        description="Dimension of the ambient space",
        json_schema_extra={"example": 2},
    )
    forms: dict[str, list[list[Coefficient]]] = Field(
        default_factory=dict,
        description="Coefficient rows of the n forms at each exceptional place",
        json_schema_extra={"example": {"inf": [[1, "-1/2"], [0, 1]]}},
    )
    c: dict[str, list[Coefficient]] = Field(
        default_factory=dict,
        description="Exact exponents c_iv as fractions",
        json_schema_extra={"example": {"inf": ["1/2", "-1/2"]}},
    )
    r: Optional[int] = Field(
        None,
        ge=2,
        description="Bound on the number of distinct forms; defaults to the count",
        json_schema_extra={"example": 4},
    )
