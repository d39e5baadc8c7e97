"""Lab configuration.

Settings are validated pydantic models. They can be loaded from a plain
``key=value`` file so experiment configurations stay diffable.
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from digit_complexity_lab import __version__
from digit_complexity_lab.errors import InputError

DEFAULT_PRECISION_BITS = 200
DEFAULT_PRECISION_CAP_BITS = 1 << 16
DEFAULT_DIGIT_BUDGET = 1 << 20
DEFAULT_MAX_DIGITS = 1 << 30


class LabSettings(BaseModel):
    """Process-wide settings shared by the command line and the HTTP surface."""

    precision_bits: int = Field(
        DEFAULT_PRECISION_BITS,
        ge=32,
        description="Working precision of real evaluations in bits",
        json_schema_extra={"example": 200},
    )
    precision_cap_bits: int = Field(
        DEFAULT_PRECISION_CAP_BITS,
        ge=32,
        description="Largest precision reached by automatic doubling",
        json_schema_extra={"example": 65536},
    )
    digit_budget: int = Field(
        DEFAULT_DIGIT_BUDGET,
        ge=1,
        description="Default number of digits generated per experiment",
        json_schema_extra={"example": 1048576},
    )
    max_digits: int = Field(
        DEFAULT_MAX_DIGITS,
        ge=1,
        description="Guard rail on any single digit request",
        json_schema_extra={"example": 1073741824},
    )
    log_base: Literal["e", "2"] = Field(
        "e",
        description="Logarithm base used by the bound formulas",
        json_schema_extra={"example": "e"},
    )
    cache_dir: Optional[Path] = Field(
        None,
        description="Directory holding cached digit streams",
        json_schema_extra={"example": ".dcl-cache"},
    )
    workers: int = Field(
        1,
        ge=1,
        description="Worker processes used by enumeration scans",
        json_schema_extra={"example": 4},
    )
    seed: int = Field(
        0,
        description="Seed for randomized suites",
        json_schema_extra={"example": 12345},
    )


class ExperimentConfig(BaseModel):
    """Configuration echoed into every experiment output."""

    name: str = Field(..., description="Experiment or subcommand name")
    subject: str = Field(
        ...,
        description="Source specification string of the digit subject",
        json_schema_extra={"example": "algebraic:[-1,2,1]:0/1:1/1"},
    )
    base: int = Field(..., ge=2, description="Digit base")
    digits: int = Field(..., ge=1, description="Digit budget")
    precision_bits: int = Field(DEFAULT_PRECISION_BITS, ge=32)
    parameters: dict[str, Any] = Field(
        default_factory=dict,
        description="Experiment specific parameters",
    )

    def config_hash(self) -> str:
        """Return the SHA-256 of the canonical JSON form of this config."""
        canonical = json.dumps(
            self.model_dump(mode="json"), sort_keys=True, separators=(",", ":")
        )
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def provenance(self) -> dict[str, Any]:
        """Return the block embedded in output files for reproducibility."""
        return {
            "config": self.model_dump(mode="json"),
            "config_hash": self.config_hash(),
            "version": __version__,
        }


def parse_key_values(lines: list[str]) -> dict[str, str]:
    """Parse ``key=value`` lines, skipping blanks and ``#`` comments.

    Args:
        lines: Raw lines of the file.

    Returns:
        dict[str, str]: Parsed pairs in file order.

    Raises:
        InputError: If a line has no ``=``.
    """
    pairs: dict[str, str] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"line {number}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        pairs[key.strip()] = value.strip()
    return pairs


def load_settings(
    path: Optional[Union[str, Path]] = None, **overrides: Any
) -> LabSettings:
    """Load settings from an optional key=value file plus explicit overrides.

    Args:
        path: Optional settings file.
        **overrides: Values taking precedence over the file; ``None`` values
            are ignored so unset command line flags do not mask the file.

    Returns:
        LabSettings: Validated settings.

    Raises:
        InputError: On unknown keys or values failing validation.
    """
    values: dict[str, Any] = {}
    if path is not None:
        values.update(parse_key_values(Path(path).read_text().splitlines()))
    values.update({k: v for k, v in overrides.items() if v is not None})

    unknown = set(values) - set(LabSettings.model_fields)
    if unknown:
        raise InputError(f"unknown settings: {', '.join(sorted(unknown))}")
    try:
        return LabSettings(**values)
    except ValidationError as e:
        raise InputError(f"invalid settings: {e}") from e
