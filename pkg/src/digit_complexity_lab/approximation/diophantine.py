"""Exhaustive search for rational approximations with p-adic side conditions.

Pairs ``(x, y)`` with ``0 < y <= y_max`` are tested against

    ``|xi - x/y| <= y^-f_inf``,  ``|x|_p <= y^-f_p`` (p in S1),
    ``|y|_p <= y^-f_p`` (p in S2).

Since ``f_inf > 0`` forces ``x/y`` close to ``xi``, the candidates for ``x``
are the integers within ``y^(1 - f_inf)`` of ``y xi``, further capped by
``|x| <= y (|xi| + 1)``. Disjoint ranges of ``y`` may run in worker
processes; results are merged sorted by ``y`` then ``x``.
"""

import csv
import io
import math
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import structlog

from digit_complexity_lab.algebraic.heights import height
from digit_complexity_lab.algebraic.numbers import AlgebraicReal
from digit_complexity_lab.arithmetic.rationals import (
    RationalLike,
    as_rational,
    padic_valuation,
    require_prime,
)
from digit_complexity_lab.arithmetic.reals import (
    BigReal,
    certify,
    current_cap,
    current_precision,
    eval_context,
    iterated_log,
)
from digit_complexity_lab.bounds.formulas import (
    cor52_count,
    cor52_threshold,
    cugiani_epsilon,
)
from digit_complexity_lab.errors import InputError

logger = structlog.get_logger(__name__)

CHUNKS_PER_WORKER = 4

Exponent = Union[Fraction, BigReal]


def _partial_quotients(lo: Fraction, hi: Fraction, count: int) -> list[int]:
    """Partial quotients shared by every number in ``[lo, hi]``."""
    quotients: list[int] = []
    while len(quotients) < count:
        a = math.floor(lo)
        if math.floor(hi) != a:
            break
        quotients.append(a)
        if lo == hi == a:
            break
        if lo == a:
            break
        lo, hi = 1 / (hi - a), 1 / (lo - a)
    return quotients


def convergents(x: AlgebraicReal, count: int) -> list[Fraction]:
    """The first ``count`` continued-fraction convergents of ``x``.

    Partial quotients are read off an isolating interval and accepted only
    when both endpoints agree, refining until ``count`` are certified. A
    rational ``x`` may have fewer convergents.

    Raises:
        InputError: If ``count`` is not positive.
        PrecisionExhausted: If the precision cap is reached first.
    """
    if count < 1:
        raise InputError("count must be at least 1")

    def decide() -> Optional[list[int]]:
        lo, hi = x.refine(current_precision())
        quotients = _partial_quotients(lo, hi, count)
        if len(quotients) >= count or lo == hi:
            return quotients
        return None

    quotients = certify(decide, check="convergents")
    result = []
    p_prev, p = 1, quotients[0]
    q_prev, q = 0, 1
    result.append(Fraction(p, q))
    for a in quotients[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        result.append(Fraction(p, q))
    return result


@dataclass(frozen=True)
class ExponentSystem:
    """Exponents ``f_inf``, ``f_p`` (p in S1) and ``f_p`` (p in S2)."""

    f_inf: Fraction
    s1: Mapping[int, Fraction] = field(default_factory=dict)
    s2: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.f_inf <= 0:
            raise InputError("f_inf must be positive for the search to be finite")
        for p, f in [*self.s1.items(), *self.s2.items()]:
            require_prime(p)
            if f < 0:
                raise InputError(f"f_{p} must be non-negative")

    @classmethod
    def of(
        cls,
        f_inf: RationalLike,
        s1: Optional[Mapping[int, RationalLike]] = None,
        s2: Optional[Mapping[int, RationalLike]] = None,
    ) -> "ExponentSystem":
        return cls(
            as_rational(f_inf),
            {int(p): as_rational(f) for p, f in (s1 or {}).items()},
            {int(p): as_rational(f) for p, f in (s2 or {}).items()},
        )

    @property
    def total(self) -> Fraction:
        return self.f_inf + sum(self.s1.values(), Fraction(0)) + sum(
            self.s2.values(), Fraction(0)
        )


def _padic_holds(value: int, p: int, y: int, f: Fraction) -> bool:
    """Exact ``|value|_p <= y^-f``, that is ``y^f <= p^v_p(value)``."""
    if value == 0 or f == 0:
        return True
    v = padic_valuation(value, p)
    return y**f.numerator <= p ** (v * f.denominator)


def _archimedean_holds(
    xi: AlgebraicReal,
    x: int,
    y: int,
    f_inf: Fraction,
    cugiani: Optional[tuple[int, Fraction]],
) -> bool:
    """Certified ``|xi - x/y| <= y^-(f_inf + eps(y))``."""
    target = Fraction(x, y)

    def decide() -> Optional[bool]:
        lo, hi = xi.refine(current_precision() + 2 * y.bit_length())
        far = max(abs(lo - target), abs(hi - target))
        near = Fraction(0) if lo <= target <= hi else min(
            abs(lo - target), abs(hi - target)
        )
        exponent: Exponent = f_inf
        if cugiani is not None:
            exponent = f_inf + cugiani_epsilon(cugiani[0], cugiani[1], y)
        bound = BigReal.exact(y).power(-exponent)
        if BigReal.exact(far).le(bound):
            return True
        if bound.lt(near):
            return False
        return None

    return certify(decide, check="approximation_window")


@dataclass(frozen=True)
class _ScanTask:
    xi: AlgebraicReal
    system: ExponentSystem
    y_start: int
    y_stop: int
    cugiani: Optional[tuple[int, Fraction]]
    coprime: bool
    precision: int
    cap: int


def _window(xi: AlgebraicReal, y: int, f_inf: Fraction, bits: int) -> range:
    lo, hi = xi.refine(bits)
    radius = BigReal.exact(y).power(1 - f_inf).hi
    cap = y * (max(abs(lo), abs(hi)) + 1)
    first = max(math.ceil(y * lo - radius), -math.floor(cap))
    last = min(math.floor(y * hi + radius), math.floor(cap))
    return range(first, last + 1)


def _scan_chunk(task: _ScanTask) -> list[tuple[int, int]]:
    """All solutions with ``y_start <= y < y_stop``, sorted by ``y`` then ``x``."""
    found = []
    with eval_context(task.precision, task.cap):
        bits = task.precision + 2 * task.y_stop.bit_length()
        system = task.system
        for y in range(task.y_start, task.y_stop):
            if not all(_padic_holds(y, p, y, f) for p, f in system.s2.items()):
                continue
            for x in _window(task.xi, y, system.f_inf, bits):
                if task.coprime and math.gcd(x, y) != 1:
                    continue
                if not all(_padic_holds(x, p, y, f) for p, f in system.s1.items()):
                    continue
                if _archimedean_holds(task.xi, x, y, system.f_inf, task.cugiani):
                    found.append((x, y))
    return found


def _scan(
    xi: AlgebraicReal,
    system: ExponentSystem,
    y_max: int,
    workers: int,
    cugiani: Optional[tuple[int, Fraction]] = None,
    coprime: bool = False,
) -> list[tuple[int, int]]:
    if y_max < 1:
        raise InputError("y_max must be at least 1")
    if workers < 1:
        raise InputError("workers must be at least 1")
    pieces = 1 if workers == 1 else workers * CHUNKS_PER_WORKER
    step = -(-y_max // pieces)
    tasks = [
        _ScanTask(
            xi,
            system,
            start,
            min(start + step, y_max + 1),
            cugiani,
            coprime,
            current_precision(),
            current_cap(),
        )
        for start in range(1, y_max + 1, step)
    ]
    if workers == 1:
        chunks = [_scan_chunk(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(_scan_chunk, tasks))
    solutions = sorted(
        (pair for chunk in chunks for pair in chunk), key=lambda s: (s[1], s[0])
    )
    logger.debug("scan_finished", y_max=y_max, workers=workers, found=len(solutions))
    return solutions


@dataclass(frozen=True)
class Solution:
    x: int
    y: int
    group_id: int


def group_by_line(pairs: list[tuple[int, int]]) -> list[Solution]:
    """Label pairs by the line through the origin that contains them.

    Group ids are assigned in order of first appearance.
    """
    ids: dict[tuple[int, int], int] = {}
    solutions = []
    for x, y in pairs:
        g = math.gcd(x, y)
        direction = (x // g, y // g)
        group = ids.setdefault(direction, len(ids))
        solutions.append(Solution(x, y, group))
    return solutions


def solutions_to_csv(solutions: list[Solution]) -> str:
    """CSV text with header ``x,y,group_id``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["x", "y", "group_id"])
    for solution in solutions:
        writer.writerow([solution.x, solution.y, solution.group_id])
    return buffer.getvalue()


@dataclass(frozen=True)
class RidoutReport:
    epsilon: Fraction
    threshold: BigReal
    bound: BigReal
    solutions: list[Solution]
    large: list[Solution]

    @property
    def group_count(self) -> int:
        """Number of lines containing the solutions above the threshold."""
        return len({s.group_id for s in self.large})

    @property
    def within_bound(self) -> bool:
        return BigReal.exact(self.group_count).le(self.bound) is True


def ridout_solutions(
    xi: AlgebraicReal,
    system: ExponentSystem,
    y_max: int,
    workers: int = 1,
) -> RidoutReport:
    """Enumerate the solutions with ``y <= y_max`` and group them by line.

    The exponents must be non-negative with ``sum f = 2 + eps`` for some
    ``eps > 0``. Solutions with ``y > max(2 H(xi), 2^(4/eps))`` are counted
    by line and compared with ``cor52_count(d, eps)``.

    Raises:
        InputError: If the exponents sum to at most 2.
    """
    epsilon = system.total - 2
    if epsilon <= 0:
        raise InputError("the exponents must add up to more than 2")
    pairs = _scan(xi, system, y_max, workers)
    solutions = group_by_line(pairs)
    threshold = cor52_threshold(height(xi), epsilon)

    def above(y: int) -> bool:
        return certify(
            lambda: cor52_threshold(height(xi), epsilon).lt(y),
            check="ridout_threshold",
        )

    large = [s for s in solutions if above(s.y)]
    report = RidoutReport(
        epsilon=epsilon,
        threshold=threshold,
        bound=cor52_count(xi.degree, epsilon),
        solutions=solutions,
        large=large,
    )
    logger.info(
        "ridout_scan_completed",
        y_max=y_max,
        solutions=len(solutions),
        large=len(large),
        groups=report.group_count,
    )
    return report


@dataclass(frozen=True)
class CugianiReport:
    m: int
    c: Fraction
    solutions: list[tuple[int, int]]
    ratios: list[BigReal]

    @property
    def max_ratio(self) -> Optional[float]:
        """Largest ``log_m y_{j+1} / log_m y_j`` seen, ``None`` if undefined."""
        if not self.ratios:
            return None
        return max(float(r.midpoint) for r in self.ratios)


def cugiani_scan(
    xi: AlgebraicReal,
    system: ExponentSystem,
    m: int,
    c: RationalLike,
    y_max: int,
    workers: int = 1,
) -> CugianiReport:
    """Reduced solutions with the decaying extra exponent ``eps(y)``.

    The exponents must sum to exactly 2; the archimedean inequality uses
    ``f_inf + cugiani_epsilon(m, c, y)``. Solutions are ordered by ``y`` and
    the ratios ``log_m y_{j+1} / log_m y_j`` of consecutive denominators are
    reported; an unbounded growth of these ratios is the expected pattern.

    Raises:
        InputError: If the exponents do not sum to 2, or ``m < 1``, ``c <= 0``.
    """
    if system.total != 2:
        raise InputError("the exponents must add up to 2")
    if m < 1:
        raise InputError("m must be at least 1")
    constant = as_rational(c)
    if constant <= 0:
        raise InputError("c must be positive")
    pairs = _scan(xi, system, y_max, workers, cugiani=(m, constant), coprime=True)
    ratios = [
        iterated_log(m, b) / iterated_log(m, a)
        for (_, a), (_, b) in zip(pairs, pairs[1:])
    ]
    logger.info("cugiani_scan_completed", m=m, y_max=y_max, solutions=len(pairs))
    return CugianiReport(m, constant, pairs, ratios)
