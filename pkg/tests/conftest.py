"""Common test fixtures and configuration."""

from collections.abc import Generator
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.api.main import app
from digit_complexity_lab.sources import AlgebraicDigitSource

# Test constants
SQRT2_MINPOLY = [-2, 0, 1]
SQRT2_INTERVAL = ("1", "3/2")
CUBIC_MINPOLY = [-1, -1, 0, 1]  # X^3 - X - 1, real root ~ 1.3247
CUBIC_INTERVAL = ("1", "3/2")


@pytest.fixture
def client() -> Generator[TestClient, None, None]:
    """Create a test client for the API.

    Yields:
        TestClient: FastAPI test client.
    """
    with TestClient(app) as client:
        yield client


@pytest.fixture
def sqrt2() -> AlgebraicReal:
    """The square root of 2 isolated in ``(1, 3/2)``."""
    return AlgebraicReal.from_coefficients(SQRT2_MINPOLY, *SQRT2_INTERVAL)


@pytest.fixture
def sqrt2_minus_one(sqrt2: AlgebraicReal) -> AlgebraicReal:
    """``sqrt(2) - 1``, the standard subject in ``(0, 1)``."""
    return sqrt2.translate(-1)


@pytest.fixture
def cubic_fraction() -> AlgebraicReal:
    """Real root of ``X^3 - X - 1`` shifted into ``(0, 1)``."""
    return AlgebraicReal.from_coefficients(CUBIC_MINPOLY, *CUBIC_INTERVAL).translate(
        -1
    )


@pytest.fixture
def sqrt2_binary(sqrt2_minus_one: AlgebraicReal) -> AlgebraicDigitSource:
    """Binary digit source of ``sqrt(2) - 1``."""
    return AlgebraicDigitSource(sqrt2_minus_one, 2)


@pytest.fixture
def cache_dir(tmp_path: Path) -> Path:
    """Empty directory for digit cache files."""
    path = tmp_path / "cache"
    path.mkdir()
    return path
