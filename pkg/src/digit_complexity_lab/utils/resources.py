"""Process resource helpers backed by psutil."""

import psutil
import structlog

from digit_complexity_lab.errors import GuardRailError

logger = structlog.get_logger(__name__)


def peak_rss_bytes() -> int:
    """Return the resident set size of the current process in bytes."""
    return int(psutil.Process().memory_info().rss)


def check_memory_headroom(required_bytes: int) -> None:
    """Refuse work that would not fit into the available memory.

    Args:
        required_bytes: Estimated allocation of the pending operation.

    Raises:
        GuardRailError: If less memory is available than required.
    """
    available = int(psutil.virtual_memory().available)
    if required_bytes > available:
        logger.error(
            "memory_headroom_exceeded", required=required_bytes, available=available
        )
        raise GuardRailError(
            f"operation needs about {required_bytes} bytes, "
            f"only {available} available"
        )
