"""Exception hierarchy shared by every lab module.

Each exception carries the process exit code the command line maps it to,
so input problems and certification problems stay distinguishable in
scripts that drive the lab.
"""

from typing import ClassVar


class LabError(Exception):
    """Base class for all lab errors."""

    exit_code: ClassVar[int] = 1


class InputError(LabError, ValueError):
    """A parameter lies outside the domain of the requested operation."""

    exit_code: ClassVar[int] = 2


class CertificationError(LabError):
    """An inequality that should hold could not be certified.

    For inequalities that are theorems this signals an implementation bug;
    for user-calibrated constants it signals an optimistic parameter.
    """

    exit_code: ClassVar[int] = 3


class PrecisionExhausted(CertificationError):
    """A comparison stayed undecided up to the configured precision cap."""

    exit_code: ClassVar[int] = 4


class CacheIntegrityError(LabError):
    """A cache file is truncated, corrupt or written by another format version."""

    exit_code: ClassVar[int] = 5


class CacheSpecError(LabError):
    """A cache file describes a different source or base than requested."""

    exit_code: ClassVar[int] = 6


class GuardRailError(LabError):
    """A requested budget exceeds the configured guard rail."""

    exit_code: ClassVar[int] = 7
