"""Command line surface of the lab."""

from .main import build_parser, main, run
from .output import CommandOutput, emit, to_jsonable

__all__ = ["CommandOutput", "build_parser", "emit", "main", "run", "to_jsonable"]
