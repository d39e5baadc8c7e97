"""API request and response models."""

from typing import Optional

from pydantic import BaseModel, Field


class HealthStatus(BaseModel):
    """Health check response model."""

    status: str = "healthy"
    version: str
    error: Optional[str] = None
    system: Optional[dict[str, str]] = None


class ErrorResponse(BaseModel):
    """Error response model."""

    detail: str


class DigitsRequest(BaseModel):
    """Request for certified digits of a real algebraic number."""

    minpoly: list[int] = Field(
        ...,
        description="Integer coefficients of the minimal polynomial, constant first",
        json_schema_extra={"example": [-2, 0, 1]},
    )
    interval: tuple[str, str] = Field(
        ...,
        description="Isolating interval as two rationals",
        json_schema_extra={"example": ["1", "3/2"]},
    )
    shift: str = Field(
        "0",
        description="Rational added to the root before expansion",
        json_schema_extra={"example": "-1"},
    )
    base: int = Field(2, ge=2, le=256, description="Digit base")
    count: int = Field(64, ge=1, description="Number of digits")


class DigitsResponse(BaseModel):
    """Certified digits of the requested number."""

    subject: str
    base: int
    count: int
    digits: str
