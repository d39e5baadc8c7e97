"""Tests for structured logging and resource guard rails."""

import json
import logging
from typing import TYPE_CHECKING

import pytest
import structlog

from digit_complexity_lab.errors import GuardRailError
from digit_complexity_lab.utils import (
    check_memory_headroom,
    configure_logging,
    peak_rss_bytes,
)

if TYPE_CHECKING:
    from pytest_mock import MockerFixture

LOGGER_NAME = "digit_complexity_lab.tests"


def test_json_rendering(caplog: pytest.LogCaptureFixture) -> None:
    """JSON mode renders one object per record with level and logger."""
    configure_logging("INFO", json=True)
    with caplog.at_level(logging.INFO):
        structlog.get_logger(LOGGER_NAME).info("digits_extended", count=3)
    record = json.loads(caplog.records[-1].getMessage())
    assert record["event"] == "digits_extended"
    assert record["count"] == 3
    assert record["level"] == "info"
    assert record["logger"] == LOGGER_NAME


def test_key_value_rendering(caplog: pytest.LogCaptureFixture) -> None:
    """The default renderer puts the event first."""
    configure_logging("INFO")
    with caplog.at_level(logging.INFO):
        structlog.get_logger(LOGGER_NAME).info("cache_hit", path="x.dcl")
    message = caplog.records[-1].getMessage()
    assert message.startswith("event='cache_hit'")
    assert "path='x.dcl'" in message


def test_level_filtering(caplog: pytest.LogCaptureFixture) -> None:
    """Records below the logger level are dropped."""
    configure_logging("WARNING")
    with caplog.at_level(logging.WARNING):
        structlog.get_logger(LOGGER_NAME).debug("precision_escalated")
    assert not caplog.records


def test_memory_headroom(mocker: "MockerFixture") -> None:
    """Requests beyond the available memory hit the guard rail."""
    mocker.patch(
        "digit_complexity_lab.utils.resources.psutil.virtual_memory",
        return_value=mocker.Mock(available=1000),
    )
    check_memory_headroom(999)
    with pytest.raises(GuardRailError, match="only 1000 available"):
        check_memory_headroom(1001)


def test_peak_rss() -> None:
    """The resident set size of a running process is positive."""
    assert peak_rss_bytes() > 0
