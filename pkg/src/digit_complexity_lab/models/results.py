"""Models for machine-readable experiment results."""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field


class BoundResult(BaseModel):
    """One evaluated bound formula."""

    formula: str = Field(
        ...,
        description="Registered formula name",
        json_schema_extra={"example": "t2"},
    )
    value: Optional[float] = Field(
        None,
        description="Midpoint of the enclosure, None when beyond float range",
        json_schema_extra={"example": 35063537.2},
    )
    lower: str = Field(
        ...,
        description="Lower end of the enclosure (12 significant digits)",
        json_schema_extra={"example": "35063537.2144"},
    )
    upper: str = Field(
        ...,
        description="Upper end of the enclosure (12 significant digits)",
        json_schema_extra={"example": "35063537.2144"},
    )
    log_value: Optional[float] = Field(
        None,
        description="Natural logarithm of the value when it is positive",
        json_schema_extra={"example": 17.37},
    )
    exact: Optional[str] = Field(
        None,
        description="The exact rational value when the result is exact",
        json_schema_extra={"example": "16"},
    )
    components: dict[str, Any] = Field(
        default_factory=dict,
        description="Further named quantities of record-valued formulas",
    )
    parameters: dict[str, str] = Field(
        default_factory=dict,
        description="Parameters as given",
        json_schema_extra={"example": {"r": "3", "delta": "1"}},
    )
    log_base: str = Field("e", description="Logarithm base of the evaluation")
    precision_bits: int = Field(..., description="Working precision in bits")
    notes: list[str] = Field(default_factory=list)


class FormulaInfo(BaseModel):
    """Entry of the formula listing."""

    name: str
    parameters: list[str]
    description: str


class FactorizationRecord(BaseModel):
    """A repetition factorization ``U V W V X`` of a prefix, by offsets."""

    prefix_length: int = Field(..., description="Length of the factorized prefix")
    r: int = Field(..., description="Length of U")
    v_length: int = Field(..., description="Length of V")
    s: int = Field(..., description="Distance between the two occurrences of V")
    x_length: int = Field(..., description="Length of the tail X")
    degenerate: bool = Field(False, description="True when no factor repeats")


class ExperimentReport(BaseModel):
    """Table and summary of one experiment run.

    Diagnostic experiments tabulate asymptotic quantities and leave ``passed``
    unset; assertable ones check finite inequalities.
    """

    name: str = Field(..., description="Experiment name")
    kind: Literal["diagnostic", "assertable"] = Field(
        "diagnostic", description="Whether the report carries a pass/fail verdict"
    )
    subject: str = Field(..., description="Source specification string")
    base: int = Field(..., description="Digit base")
    digits: int = Field(..., description="Number of digits examined")
    columns: list[str] = Field(default_factory=list, description="Column names")
    rows: list[list[Optional[float]]] = Field(
        default_factory=list, description="Table rows in column order"
    )
    summary: dict[str, Any] = Field(
        default_factory=dict,
        description="Fitted exponents, constants and other scalar results",
        json_schema_extra={"example": {"fitted_exponent": 1.02}},
    )
    passed: Optional[bool] = Field(None, description="Verdict of assertable checks")
    notes: list[str] = Field(default_factory=list)
