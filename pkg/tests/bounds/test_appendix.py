"""Tests for the two-dimensional constants and the shift parameters."""

import math
from fractions import Fraction

import pytest

from digit_complexity_lab.arithmetic.reals import BigReal
from digit_complexity_lab.bounds import (
    a1_count,
    appendix_constants,
    eta_residual,
    m_of,
    section7_params,
    solve_eta,
    t3,
    t4,
)
from digit_complexity_lab.errors import InputError

M_R2_DELTA1 = 1 + math.floor(25600 * math.log(4))


def test_m_of() -> None:
    """``m = 1 + [25600 delta^-2 log(2r)]``."""
    assert m_of(2, 1) == M_R2_DELTA1 == 35490
    assert m_of(2, "1/2") == 1 + math.floor(4 * 25600 * math.log(4))


def test_t3_and_t4() -> None:
    """Window counts for simple arguments."""
    assert float(t3(16, 256, 1)) == pytest.approx(1 + math.log(2) / math.log(1.5))
    assert float(t4(1, 1)) == 0
    with pytest.raises(InputError):
        t3(4, 256, 1)
    with pytest.raises(InputError):
        t3(256, 16, 1)


@pytest.mark.slow
def test_appendix_constants() -> None:
    """``log C`` is finite and dwarfs ``log C'``; every window count is positive."""
    constants = appendix_constants(2, 1, 1, A=16, B=256)
    assert constants.m == M_R2_DELTA1
    assert constants.log_C_prime.lt(constants.log_C) is True
    assert constants.t5.lo > 0
    assert constants.t3 is not None
    assert float(constants.log_C_prime) == pytest.approx(math.log(4))


@pytest.mark.parametrize("v", ["1/100", "1/22", "1/12"])
def test_solve_eta(v: str) -> None:
    """The root lies in ``(0, 1)`` and the residual encloses zero."""
    eta = solve_eta(v)
    assert 0 < eta.lo <= eta.hi < 1
    assert eta_residual(v, eta).contains(0)


@pytest.mark.parametrize("v", ["0", "1/11", "1"])
def test_solve_eta_domain(v: str) -> None:
    """``v`` must lie in ``(0, 1/11)``."""
    with pytest.raises(InputError):
        solve_eta(v)


def test_section7_params() -> None:
    """``eps = (log t_N)^-v`` and ``k = [2/eps] + 1``."""
    params = section7_params("1/22", 2, log_t_N=1000)
    epsilon = 1000 ** (-1 / 22)
    assert float(params.epsilon) == pytest.approx(epsilon, rel=1e-12)
    assert params.k == math.floor(2 / epsilon) + 1
    assert isinstance(params.kA1_plus_ok, bool)
    assert params.A1_minus.lt(params.A1_plus) is True


def test_section7_arguments() -> None:
    """Exactly one size is given; ``t_N >= 3``."""
    with pytest.raises(InputError):
        section7_params("1/22", 2)
    with pytest.raises(InputError):
        section7_params("1/22", 2, t_N=10, log_t_N=5)
    with pytest.raises(InputError):
        section7_params("1/22", 2, t_N=2)


def test_a1_count_arguments() -> None:
    """Sign is +1 or -1 and epsilon must exceed ``1/k``."""
    epsilon = BigReal.exact(Fraction(1, 2))
    with pytest.raises(InputError):
        a1_count(epsilon, 4, 2, 0)
    with pytest.raises(InputError):
        a1_count(epsilon, 2, 2, 1)
