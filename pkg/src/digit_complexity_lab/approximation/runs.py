"""Approximants read off the ends of constant digit runs.

If ``a_{n_j} != a_{n_j + 1}`` and the digits up to ``n_{j+1}`` repeat
``a_{n_j + 1}``, then ``xi`` is within ``b^-n_{j+1}`` of

    ``xi_j = P_j(b) / (b^n_j (b - 1))``,  ``P_j(b) = (b - 1) D_j + a_{n_j + 1}``

where ``D_j`` is the integer written by the first ``n_j`` digits. Long runs
therefore give very good rational approximations, which Liouville's
inequality and the subspace theorem limit for algebraic ``xi``.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import structlog
import sympy

from digit_complexity_lab.algebraic.heights import height
from digit_complexity_lab.algebraic.numbers import AlgebraicReal
from digit_complexity_lab.arithmetic.rationals import (
    RationalLike,
    as_rational,
    padic_abs,
    padic_valuation,
)
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    RealLike,
    certify,
    coerce_real,
    current_precision,
    log,
    maximum,
)
from digit_complexity_lab.bounds.formulas import lemma81_count
from digit_complexity_lab.errors import CertificationError, InputError
from digit_complexity_lab.metrics import get_lab_metrics
from digit_complexity_lab.sources.algebraic import AlgebraicDigitSource
from digit_complexity_lab.sources.base import BaseDigitSource
from digit_complexity_lab.sources.shifted import (
    ShiftedSource,
    SourceLike,
    as_source,
    first_digit_shift,
)
from digit_complexity_lab.words.runs import run_boundaries
from digit_complexity_lab.words.word import FiniteWord

from .approximants import distance_bounds

logger = structlog.get_logger(__name__)

DEFAULT_PREFIX = 1 << 12
DEFAULT_SHIFT_LIMIT = 1 << 10


@dataclass(frozen=True)
class RunApproximant:
    """``xi_j`` for the ``j``-th run end ``n_j``.

    ``liouville`` records whether ``|(b-1) xi - P_j / b^n_j|`` was certified
    to be at least ``(2 H((b-1) xi) b^n_j)^-d``; ``None`` when not checked.
    """

    j: int
    n: int
    n_next: int
    numerator: int
    base: int
    liouville: Optional[bool] = None

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.base**self.n * (self.base - 1))


@dataclass(frozen=True)
class NormalizedSubject:
    """A number moved into ``((b-1)/b, 1)`` by dropping its first digits.

    ``shift`` is the number of dropped digits, ``None`` when no digit
    ``b - 1`` appeared within the examined prefix and the number is used as
    given. ``algebraic`` is the shifted number when it is algebraic.
    """

    source: BaseDigitSource
    shift: Optional[int]
    algebraic: Optional[AlgebraicReal]


def normalize_subject(
    x: SourceLike, base: int, limit: int = DEFAULT_SHIFT_LIMIT
) -> NormalizedSubject:
    """Shift ``x`` to its first digit ``b - 1``.

    Args:
        x: Number in ``(0, 1)`` or digit source.
        base: Digit base.
        limit: Number of leading digits searched for ``b - 1``.

    Returns:
        NormalizedSubject: The shifted source and the shift.
    """
    source = as_source(x, base)
    shift = first_digit_shift(source, base - 1, limit)
    algebraic = x if isinstance(x, AlgebraicReal) else getattr(source, "x", None)
    if shift is None:
        logger.warning("normalization_skipped", base=base, limit=limit)
        return NormalizedSubject(source, None, algebraic)
    if shift == 0:
        return NormalizedSubject(source, 0, algebraic)
    if algebraic is not None:
        head = source.digits(shift).integer_value()
        moved = algebraic.scale_by(base**shift).translate(-head)
        return NormalizedSubject(AlgebraicDigitSource(moved, base), shift, moved)
    return NormalizedSubject(ShiftedSource(source, shift), shift, None)


def _scaled_height(x: AlgebraicReal, base: int) -> BigReal:
    return height(x.scale_by(base - 1))


def _reaches(n: int, threshold: Callable[[], BigReal], check: str) -> bool:
    """Certified ``threshold() <= n``, recomputing the threshold per attempt."""
    return certify(lambda: threshold().le(n), check=check)


def _liouville_holds(
    source: BaseDigitSource, approximant: RunApproximant, x: AlgebraicReal
) -> bool:
    b, n, d = approximant.base, approximant.n, x.degree
    scaled_height = _scaled_height(x, b)
    extra = (d * n + 1) * b.bit_length() + 64

    def decide() -> Optional[bool]:
        near, far = distance_bounds(
            source, approximant.value, current_precision() + extra
        )
        bound = (2 * scaled_height * b**n) ** -d
        if bound.le(BigReal.exact((b - 1) * near)):
            return True
        if BigReal.exact((b - 1) * far).lt(bound):
            return False
        return None

    return certify(decide, check="liouville")


def _certify_run(source: BaseDigitSource, approximant: RunApproximant) -> None:
    """Certify ``|xi - xi_j| < b^-n_{j+1}`` and ``b`` not dividing ``P_j(b)``."""
    b = approximant.base
    metrics = get_lab_metrics()
    if approximant.numerator % b == 0:
        metrics.certification_failures.labels(check="run_numerator").inc()
        raise CertificationError(
            f"b divides P_{approximant.j}(b) = {approximant.numerator}"
        )
    radius = Fraction(1, b**approximant.n_next)
    extra = (approximant.n_next + 1) * b.bit_length()

    def decide() -> Optional[bool]:
        near, far = distance_bounds(
            source, approximant.value, current_precision() + extra
        )
        if far < radius:
            return True
        if near >= radius:
            return False
        return None

    if not certify(decide, check="run_error"):
        metrics.certification_failures.labels(check="run_error").inc()
        raise CertificationError(
            f"|xi - xi_{approximant.j}| is not below {b}^-{approximant.n_next}"
        )


def _word_with_runs(source: BaseDigitSource, runs: int, prefix: int) -> FiniteWord:
    """A prefix holding ``runs`` run ends, or ``prefix`` digits if that comes first."""
    length = min(DEFAULT_PREFIX, prefix)
    while True:
        word = source.digits(length)
        if len(run_boundaries(word)) >= runs or length >= prefix:
            return word
        length = min(2 * length, prefix)


def run_approximants_of(
    source: BaseDigitSource,
    j_max: int,
    prefix: int = 1 << 16,
    algebraic: Optional[AlgebraicReal] = None,
) -> list[RunApproximant]:
    """Certified run approximants ``xi_1 .. xi_{j_max}`` of a digit source.

    Only runs whose following run end lies inside the examined prefix are
    returned.
    """
    if j_max < 1:
        raise InputError("j_max must be at least 1")
    b = source.base
    word = _word_with_runs(source, j_max + 1, prefix)
    boundaries = run_boundaries(word)
    check_liouville = algebraic is not None and not algebraic.is_rational
    runs: list[RunApproximant] = []
    for j in range(1, min(j_max, len(boundaries) - 1) + 1):
        n, n_next = boundaries[j - 1], boundaries[j]
        numerator = (b - 1) * word[:n].integer_value() + word[n]
        approximant = RunApproximant(j, n, n_next, numerator, b)
        _certify_run(source, approximant)
        if check_liouville:
            holds = _liouville_holds(source, approximant, algebraic)
            approximant = RunApproximant(j, n, n_next, numerator, b, holds)
        runs.append(approximant)
    logger.info("run_approximants_certified", base=b, runs=len(runs))
    return runs


def run_approximants(
    x: SourceLike, base: int, j_max: int, prefix: int = 1 << 16
) -> tuple[NormalizedSubject, list[RunApproximant]]:
    """Normalize ``x`` and certify its first ``j_max`` run approximants.

    Returns:
        tuple: The normalized subject (its shift is part of the result) and
        the approximants of the shifted number.
    """
    subject = normalize_subject(x, base)
    runs = run_approximants_of(subject.source, j_max, prefix, subject.algebraic)
    return subject, runs


@dataclass(frozen=True)
class DoublingReport:
    """Liouville threshold ``U`` and the growth check of run ends beyond it."""

    U: BigReal
    degree: int
    checked: list[tuple[int, int, int, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.checked)


def liouville_threshold(
    x: AlgebraicReal, base: int, j_max: int = 30, prefix: int = 1 << 16
) -> DoublingReport:
    """``U = 1 + 3 H((b-1) x)`` and the check ``n_{j+1} <= 2 d n_j`` for ``n_j >= U``.

    The number is used as given.

    Raises:
        InputError: For rational ``x``.
    """
    if x.is_rational:
        raise InputError("the Liouville threshold needs an irrational number")
    d = x.degree
    word = _word_with_runs(AlgebraicDigitSource(x, base), j_max + 1, prefix)
    boundaries = run_boundaries(word)
    checked = []

    def threshold() -> BigReal:
        return 1 + 3 * _scaled_height(x, base)

    for n, n_next in zip(boundaries, boundaries[1:j_max + 1]):
        if _reaches(n, threshold, "liouville_threshold"):
            checked.append((n, n_next, 2 * d * n, n_next <= 2 * d * n))
    report = DoublingReport(threshold(), d, checked)
    if not report.passed:
        logger.warning("doubling_check_failed", base=base, checked=len(checked))
    return report


@dataclass(frozen=True)
class Lemma81Report:
    """Large run-length jumps of a normalized algebraic number."""

    epsilon: Fraction
    U: BigReal
    j1: Optional[int]
    jumps: list[int]
    bound: BigReal
    approximation_ok: bool
    valuation_ok: bool
    exponent_sum_ok: bool

    @property
    def count(self) -> int:
        return len(self.jumps)

    @property
    def within_bound(self) -> bool:
        return BigReal.exact(self.count).le(self.bound) is True


def _approximation_holds(
    source: BaseDigitSource, approximant: RunApproximant, epsilon: Fraction
) -> bool:
    """Certify ``|(b-1) xi - P_j / b^n_j| <= (b^n_j)^-(1 + eps)``."""
    b, n = approximant.base, approximant.n
    bound = BigReal.exact(b).power(-n * (1 + epsilon))
    extra = (2 * n + 1) * b.bit_length()

    def decide() -> Optional[bool]:
        near, far = distance_bounds(
            source, approximant.value, current_precision() + extra
        )
        if BigReal.exact((b - 1) * far).le(bound):
            return True
        if bound.lt(BigReal.exact((b - 1) * near)):
            return False
        return None

    return certify(decide, check="run_approximation")


def _valuations_hold(base: int, n: int) -> bool:
    """``|b^n|_l = |b|_l^n`` for every prime ``l | b`` and ``prod l^v_l(b) = b``."""
    primes = [int(p) for p in sympy.primefactors(base)]
    if not all(padic_abs(base**n, p) == padic_abs(base, p) ** n for p in primes):
        return False
    product = 1
    for p in primes:
        product *= p ** padic_valuation(base, p)
    return product == base


def lemma81_check(
    x: AlgebraicReal,
    base: int,
    epsilon: RationalLike,
    j_max: int = 200,
    prefix: int = 1 << 16,
) -> Lemma81Report:
    """Count run ends ``j >= j1`` with ``n_{j+1} >= (1 + 2 eps) n_j``.

    ``j1`` is the first ``j`` with ``n_j >= max(U, 5/eps)``. For every such
    jump the approximation ``(b^n_j)^-(1+eps)`` is certified together with
    the valuation identities that turn it into a two-place approximation
    problem with exponents summing to ``2 + eps``. The count is compared
    with ``lemma81_count(d, eps)``.

    Raises:
        InputError: Unless ``0 < eps <= 1`` and ``x`` is irrational.
    """
    eps = as_rational(epsilon)
    if not 0 < eps <= 1:
        raise InputError("epsilon must lie in (0, 1]")
    if x.is_rational:
        raise InputError("the run-jump count needs an irrational number")
    subject = normalize_subject(x, base)
    xi = subject.algebraic if subject.algebraic is not None else x
    runs = run_approximants_of(subject.source, j_max, prefix)

    def start() -> BigReal:
        return maximum(1 + 3 * _scaled_height(xi, base), 5 / eps)

    j1: Optional[int] = None
    for run in runs:
        if _reaches(run.n, start, "run_jump_start"):
            j1 = run.j
            break
    jumps = [
        run.j
        for run in runs
        if j1 is not None and run.j >= j1 and run.n_next >= (1 + 2 * eps) * run.n
    ]
    by_j = {run.j: run for run in runs}
    approximation_ok = all(
        _approximation_holds(subject.source, by_j[j], eps) for j in jumps
    )
    valuation_ok = all(_valuations_hold(base, by_j[j].n) for j in jumps)
    # The finite-place exponents -log|b|_l / log b add up to -1.
    shares = BigReal.exact(0)
    for p in sympy.primefactors(base):
        shares = shares + padic_valuation(base, int(p)) * log(int(p))
    exponent_sum_ok = (shares / log(base)).contains(1)
    report = Lemma81Report(
        epsilon=eps,
        U=1 + 3 * _scaled_height(xi, base),
        j1=j1,
        jumps=jumps,
        bound=lemma81_count(xi.degree, eps),
        approximation_ok=approximation_ok,
        valuation_ok=valuation_ok,
        exponent_sum_ok=exponent_sum_ok,
    )
    logger.info("run_jumps_counted", base=base, jumps=report.count, j1=j1)
    return report


@dataclass(frozen=True)
class Theorem31Chain:
    """Parameter chain bounding the number of digit changes below ``J``."""

    J: int
    d: int
    j0: Optional[int]
    hypothesis: bool
    j2: Optional[int]
    n_j2: Optional[int]
    n_j2_large: bool
    epsilon1: BigReal
    threshold_ok: bool

    @property
    def passed(self) -> bool:
        return self.hypothesis and self.n_j2_large and self.threshold_ok


def _epsilon1(d: int, J: int) -> BigReal:
    return (log(6 * d) * log(J) / J).root(3)


def theorem31_chain(
    boundaries: Sequence[int],
    prefix_length: int,
    d: int,
    J: int,
    U: RealLike,
) -> Theorem31Chain:
    """Evaluate the chain ``j0``, ``j2`` and ``eps1`` for one ``J``.

    Args:
        boundaries: Run ends ``n_1 < n_2 < ...`` of the number.
        prefix_length: Length of the prefix the run ends were read from; it
            must exceed ``6 d J^(1/3)`` so that ``j2`` is determined.
        d: Degree of the number.
        J: The cut-off.
        U: Liouville threshold.

    Returns:
        Theorem31Chain: ``j0`` is the first run end at least ``U``; the
        hypothesis is ``J > max(n_j0^3, (4d)^6)``; ``j2`` is the last run end
        with ``n <= 6 d J^(1/3)``, which must satisfy ``n_j2 >= 3 J^(1/3)``
        and ``n_j2 >= max(U, 5/eps1)`` with
        ``eps1 = (log(6d) log J / J)^(1/3)``.

    Raises:
        InputError: If the prefix is too short.
    """
    if d < 1 or J < 2:
        raise InputError("d must be positive and J at least 2")
    if prefix_length**3 <= 216 * d**3 * J:
        raise InputError("prefix too short to find the last run end below 6 d J^(1/3)")
    threshold = coerce_real(U)
    j0 = next(
        (j for j, n in enumerate(boundaries, start=1) if threshold.le(n) is True),
        None,
    )
    hypothesis = j0 is not None and J > max(boundaries[j0 - 1] ** 3, (4 * d) ** 6)
    eligible = [
        (j, n) for j, n in enumerate(boundaries, start=1) if n**3 <= 216 * d**3 * J
    ]
    j2, n_j2 = eligible[-1] if eligible else (None, None)
    epsilon1 = _epsilon1(d, J)
    large = n_j2 is not None and n_j2**3 >= 27 * J
    threshold_ok = n_j2 is not None and _reaches(
        n_j2,
        lambda: maximum(threshold, 5 / _epsilon1(d, J)),
        "chain_threshold",
    )
    return Theorem31Chain(
        J=J,
        d=d,
        j0=j0,
        hypothesis=hypothesis,
        j2=j2,
        n_j2=n_j2,
        n_j2_large=large,
        epsilon1=epsilon1,
        threshold_ok=bool(threshold_ok),
    )
