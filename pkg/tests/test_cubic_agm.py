import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubic_modular.cubic_agm import (AgmState, agm_iterate, agm_limit, agm_step,
                                     check_agm_limit_case_a, check_agm_limit_case_b,
                                     check_agm_one_step, check_f1313_cubic_transform,
                                     check_scaled_f1313_functional_equation, g_scaled,
                                     t_map, t_map_derivative)
from cubic_modular.errors import ConvergenceError, DomainError

THIRD = mpmath.mpf(1) / 3
XS = [float(x) for x in np.linspace(0.05, 0.95, 20)]


def test_step_fixed_point_and_arithmetic():
    st_ = agm_step(AgmState(0.7, 0.7))
    assert (st_.a_n, st_.b_n, st_.n) == pytest.approx((0.7, 0.7, 1), rel=1e-15)
    st_ = agm_step(AgmState(1.0, 0.5))
    assert st_.a_n == pytest.approx(2 / 3, rel=1e-15)
    assert st_.b_n == pytest.approx((0.5 * 1.75 / 3) ** (1 / 3), rel=1e-15)


def test_step_homogeneous():
    lam = 2.5
    s1 = agm_step(AgmState(lam * 1.0, lam * 0.3))
    s2 = agm_step(AgmState(1.0, 0.3))
    assert s1.a_n == pytest.approx(lam * s2.a_n, rel=1e-15)
    assert s1.b_n == pytest.approx(lam * s2.b_n, rel=1e-15)


@given(st.floats(0.01, 100), st.floats(0.01, 100))
@settings(max_examples=100, deadline=None)
def test_gap_non_increasing(a, b):
    st_ = AgmState(a, b)
    nxt = agm_step(st_)
    for _ in range(5):
        assert agm_step(nxt).gap <= nxt.gap + 4 * math.ulp(nxt.a_n)
        nxt = agm_step(nxt)


def test_limit_trivial_and_homogeneous():
    assert agm_limit(0.4, 0.4) == 0.4
    for x in (0.1, 0.5, 0.9):
        assert agm_limit(3.0, 3.0 * x) == pytest.approx(3.0 * agm_limit(1.0, x), rel=1e-13)


def test_limit_against_hypergeometric_oracle():
    for x in XS:
        xm = mpmath.mpf(x)
        case_a = 1 / mpmath.hyp2f1(THIRD, 2 * THIRD, 1, 1 - xm ** 3)
        case_b = 1 / mpmath.hyp2f1(THIRD, THIRD, 1, 1 - xm ** 3)
        assert agm_limit(1.0, x) == pytest.approx(float(case_a), rel=1e-14)
        assert agm_limit(x, 1.0) == pytest.approx(float(case_b), rel=1e-14)


def test_fast_convergence():
    for x in np.linspace(0.1, 0.9, 17):
        assert agm_iterate(1.0, float(x)).n <= 8
        assert agm_iterate(float(x), 1.0).n <= 8


def test_bad_inputs():
    with pytest.raises(DomainError):
        AgmState(-1.0, 1.0)
    with pytest.raises(DomainError):
        agm_limit(1.0, 0.5, tol=0.0)
    with pytest.raises(ConvergenceError):
        agm_limit(1.0, 0.3, tol=1e-300)


def test_identity_checks_pass():
    for x in XS:
        for check in (check_agm_limit_case_a, check_agm_limit_case_b, check_agm_one_step,
                      check_f1313_cubic_transform):
            rep = check(x)
            assert rep.passed, rep
    # near x = 1 both sides of the F(1/3,1/3;1;.) transformation tend to 1
    rep = check_f1313_cubic_transform(1 - 1e-9)
    assert rep.lhs == pytest.approx(1.0, abs=1e-7) and rep.rhs == pytest.approx(1.0, abs=1e-7)


def test_f1313_transform_against_mpmath():
    for x in (0.5, 0.9):
        rep = check_f1313_cubic_transform(x)
        xm = mpmath.mpf(x)
        assert rep.lhs == pytest.approx(float(mpmath.hyp2f1(THIRD, THIRD, 1, 1 - xm ** 3)), rel=1e-14)
        assert abs(rep.margin) <= 1e-11


def test_t_map_and_derivative():
    assert t_map(0.5) < 0.5 / 9
    h = 1e-6
    fd = (t_map(0.3 + h) - t_map(0.3 - h)) / (2 * h)
    assert t_map_derivative(0.3) == pytest.approx(fd, rel=1e-6)


def test_functional_equation():
    for x in np.linspace(0.05, 0.95, 10):
        rep = check_scaled_f1313_functional_equation(float(x))
        assert rep.passed and abs(rep.margin) <= 1e-10
    xm = mpmath.mpf("0.5")
    oracle = mpmath.sqrt(xm) * mpmath.cbrt(1 - xm) * mpmath.hyp2f1(THIRD, THIRD, 1, xm)
    assert g_scaled(0.5) == pytest.approx(float(oracle), rel=1e-14)
