"""Machine-readable command output.

JSON output is one document ``{"provenance": ..., "result": ...}``. CSV
output starts with ``#`` comment lines carrying the provenance, followed by
a header row and the table; it loads directly into gnuplot and pandas.
"""

import csv
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TextIO

from pydantic import BaseModel

from digit_complexity_lab.arithmetic.reals import BigReal
from digit_complexity_lab.config import ExperimentConfig


@dataclass
class CommandOutput:
    """Result of one subcommand: a JSON payload and an optional table."""

    result: Any
    columns: list[str] = field(default_factory=list)
    rows: list[Sequence[Any]] = field(default_factory=list)


def to_jsonable(value: Any) -> Any:
    """Convert models, exact numbers and containers for ``json.dumps``."""
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, BigReal):
        return {"lower": str(value.lo), "upper": str(value.hi), "value": float(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def write_json(output: CommandOutput, config: ExperimentConfig, stream: TextIO) -> None:
    document = {
        "provenance": config.provenance(),
        "result": to_jsonable(output.result),
    }
    json.dump(document, stream, indent=2, sort_keys=True)
    stream.write("\n")


def write_csv(output: CommandOutput, config: ExperimentConfig, stream: TextIO) -> None:
    provenance = config.provenance()
    stream.write(f"# config_hash={provenance['config_hash']}\n")
    stream.write(f"# version={provenance['version']}\n")
    writer = csv.writer(stream, lineterminator="\n")
    if output.columns:
        writer.writerow(output.columns)
    for row in output.rows:
        writer.writerow([to_jsonable(v) for v in row])


def emit(
    output: CommandOutput, config: ExperimentConfig, fmt: str, stream: TextIO
) -> None:
    """Write ``output`` as ``fmt``; outputs without a table fall back to JSON."""
    if fmt == "csv" and output.columns:
        write_csv(output, config, stream)
    else:
        write_json(output, config, stream)
