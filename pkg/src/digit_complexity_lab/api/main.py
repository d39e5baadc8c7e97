"""Main API module."""

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import RedirectResponse, Response

from digit_complexity_lab import __version__
from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.arithmetic import eval_context
from digit_complexity_lab.bounds import evaluate_bound, list_formulas
from digit_complexity_lab.config import load_settings
from digit_complexity_lab.errors import InputError, LabError
from digit_complexity_lab.metrics import get_latest_metrics
from digit_complexity_lab.models import (
    BoundResult,
    DigitsRequest,
    DigitsResponse,
    ErrorResponse,
    FormulaInfo,
    HealthStatus,
)
from digit_complexity_lab.sources import AlgebraicDigitSource

HTTP_422_UNPROCESSABLE_ENTITY = 422
HTTP_500_INTERNAL_SERVER_ERROR = 500

app = FastAPI(
    title="Digit Complexity Lab",
    description="API for certified digits and explicit subspace-theorem bounds",
    version=__version__,
    docs_url="/api/docs",
    redoc_url="/api/redoc",
)

settings = load_settings()


def _http_error(e: LabError, action: str) -> HTTPException:
    status = (
        HTTP_422_UNPROCESSABLE_ENTITY
        if isinstance(e, InputError)
        else HTTP_500_INTERNAL_SERVER_ERROR
    )
    return HTTPException(status_code=status, detail=f"Failed to {action}: {e!s}")


@app.get(
    "/",
    tags=["System"],
    response_class=RedirectResponse,
    responses={
        302: {"description": "Redirect to API documentation"},
    },
)
async def root() -> RedirectResponse:
    """Root endpoint that redirects to API documentation.

    Returns:
        RedirectResponse: Redirect to the API documentation.
    """
    return RedirectResponse(url="/api/docs")


@app.get(
    "/health",
    tags=["System"],
    response_model=HealthStatus,
    responses={
        200: {"model": HealthStatus},
    },
)
async def health_check() -> HealthStatus:
    """Health check endpoint.

    Evaluates one small bound as a smoke test of the exact layer.

    Returns:
        HealthStatus: Status of the service including version and settings.
    """
    try:
        with eval_context(settings.precision_bits, settings.precision_cap_bits):
            evaluate_bound("t2", {"r": "3", "delta": "1"})
        return HealthStatus(
            status="healthy",
            version=__version__,
            system={
                "api": "running",
                "precision_bits": str(settings.precision_bits),
                "log_base": settings.log_base,
            },
        )
    except Exception as e:
        return HealthStatus(
            status="unhealthy",
            version=__version__,
            error=f"{e!s}",
        )


@app.get(
    "/metrics",
    tags=["Metrics"],
    response_class=Response,
    responses={
        200: {
            "content": {"text/plain": {}},
            "description": "Prometheus formatted metrics",
        },
        500: {"model": ErrorResponse},
    },
)
async def get_metrics() -> Response:
    """Get lab metrics in Prometheus format.

    Returns:
        Response: Prometheus formatted metrics

    Raises:
        HTTPException: If the exposition fails
    """
    try:
        return Response(content=get_latest_metrics(), media_type="text/plain")
    except Exception as e:
        raise HTTPException(
            status_code=HTTP_500_INTERNAL_SERVER_ERROR,
            detail=f"Failed to generate Prometheus metrics: {e!s}",
        ) from e


@app.get(
    "/bounds",
    tags=["Bounds"],
    response_model=list[FormulaInfo],
)
async def get_formulas() -> list[FormulaInfo]:
    """List the registered bound formulas and their parameters."""
    return list_formulas()


@app.get(
    "/bounds/{formula}",
    tags=["Bounds"],
    response_model=BoundResult,
    responses={
        422: {"model": ErrorResponse},
        500: {"model": ErrorResponse},
    },
)
def get_bound(formula: str, request: Request) -> BoundResult:
    """Evaluate a bound formula from query parameters.

    Args:
        formula: Registered formula name, e.g. ``t2``.
        request: Incoming request; every query parameter is a formula
            parameter such as ``r=3``.

    Returns:
        BoundResult: Same record as the ``bounds evaluate`` command.

    Raises:
        HTTPException: 422 for invalid parameters, 500 for failed evaluations
    """
    try:
        with eval_context(
            settings.precision_bits, settings.precision_cap_bits, settings.log_base
        ):
            return evaluate_bound(formula, dict(request.query_params))
    except LabError as e:
        raise _http_error(e, f"evaluate {formula}") from e


@app.post(
    "/digits",
    tags=["Digits"],
    response_model=DigitsResponse,
    responses={
        422: {"model": ErrorResponse},
        500: {"model": ErrorResponse},
    },
)
def post_digits(body: DigitsRequest) -> DigitsResponse:
    """Certified digits of a real algebraic number in ``(0, 1)``.

    Args:
        body: Minimal polynomial, isolating interval, shift, base and count.

    Returns:
        DigitsResponse: The digits as text.

    Raises:
        HTTPException: 422 for invalid numbers, 500 for certification failures
    """
    try:
        with eval_context(settings.precision_bits, settings.precision_cap_bits):
            x = AlgebraicReal.from_coefficients(body.minpoly, *body.interval)
            x = x.translate(body.shift)
            source = AlgebraicDigitSource(x, body.base, settings.max_digits)
            word = source.digits(body.count)
    except LabError as e:
        raise _http_error(e, "compute digits") from e
    return DigitsResponse(
        subject=source.spec_string(),
        base=body.base,
        count=body.count,
        digits=word.to_string(),
    )
