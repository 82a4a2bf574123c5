import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SIGNATURES, mp_mu_star
from cubic_modular.errors import DomainError
from cubic_modular.modular import (complement, mu_a, mu_star, mu_star_derivative,
                                   mu_star_inverse, mu_star_range, mu_star_with_error,
                                   phi13_star_closed, phi3_star_closed, phi_star)

THIRD = 1.0 / 3.0
SELF_COMP = 2.0 ** -THIRD
FIXED = (math.sqrt(3.0) - 1.0) / 2.0


def half_period(a):
    return math.pi / (2 * math.sin(math.pi * a))


def test_complement_basic():
    assert complement(SELF_COMP) == pytest.approx(SELF_COMP, rel=1e-15)
    assert complement(0.2) == pytest.approx((1 - 0.008) ** (1 / 3), rel=1e-15)
    for r in np.linspace(0.01, 0.99, 30):
        rs = complement(float(r))
        assert r ** 3 + rs ** 3 == pytest.approx(1.0, abs=1e-15)
        assert complement(rs) == pytest.approx(r, rel=1e-13)


def test_radius_domain():
    for r in (0.0, 1.0, -0.2, 1e-10, 1 - 1e-10, float("nan")):
        with pytest.raises(DomainError):
            mu_star(0.3, r)
    for a in (0.0, 0.51, -0.1, 0.7):
        with pytest.raises(DomainError):
            mu_star(a, 0.5)


def test_mu_a_values():
    assert mu_a(0.5, 1 / math.sqrt(2)) == pytest.approx(math.pi / 2, rel=1e-15)
    assert mu_a(0.3, 0.5 ** 1.5) == pytest.approx(mu_star(0.3, 0.5), rel=1e-13)


def test_mu_a_against_brute_force_quotient():
    a, r = THIRD, 0.6

    def series(x, n=1000):
        t, s = 1.0, 1.0
        for k in range(n):
            t *= (a + k) * (1 - a + k) / ((1 + k) ** 2) * x
            s += t
        return s
    oracle = half_period(a) * series(1 - r * r) / series(r * r)
    assert mu_a(a, r) == pytest.approx(oracle, abs=1e-12)


@pytest.mark.parametrize("a", SIGNATURES)
def test_mu_star_against_mpmath(a):
    for r in np.linspace(0.02, 0.98, 25):
        r = float(r)
        assert mu_star(a, r) == pytest.approx(float(mp_mu_star(a, r)), rel=5e-15)


def test_mu_star_error_estimate_covers_error():
    for a in SIGNATURES:
        for r in (0.01, 0.3, 0.9, 0.999):
            value, err = mu_star_with_error(a, r)
            assert abs(value - mp_mu_star(a, r)) <= err


def test_mu_star_special_values():
    for a in SIGNATURES:
        assert mu_star(a, SELF_COMP) == pytest.approx(half_period(a), abs=1e-12)
    assert mu_star(THIRD, FIXED) == pytest.approx(math.pi, abs=1e-12)
    product = mu_star(THIRD, 0.5) * mu_star(THIRD, 0.25)
    assert product == pytest.approx(math.pi ** 2, abs=1e-11)


@pytest.mark.parametrize("a", SIGNATURES)
def test_mu_star_strictly_decreasing(a):
    values = [mu_star(a, float(r)) for r in np.linspace(0.01, 0.99, 50)]
    assert all(x > y for x, y in zip(values, values[1:]))


@pytest.mark.parametrize("a", SIGNATURES)
def test_complement_product(a):
    for r in np.linspace(0.02, 0.98, 25):
        r = float(r)
        assert mu_star(a, r) * mu_star(a, complement(r)) == pytest.approx(
            half_period(a) ** 2, abs=1e-10)


def test_derivative_against_finite_differences():
    for a, r in [(THIRD, 0.5), (0.5, SELF_COMP), (0.1, 0.2), (0.4, 0.9)]:
        h = 1e-6
        fd = (mu_star(a, r + h) - mu_star(a, r - h)) / (2 * h)
        assert mu_star_derivative(a, r) == pytest.approx(fd, rel=1e-6)
        assert mu_star_derivative(a, r) < 0


def test_inverse_special_values():
    assert mu_star_inverse(THIRD, math.pi) == pytest.approx(FIXED, abs=1e-12)
    for a in SIGNATURES:
        assert mu_star_inverse(a, half_period(a)) == pytest.approx(SELF_COMP, abs=1e-12)
    r = mu_star_inverse(0.4, 2.0)
    assert abs(mu_star(0.4, r) - 2.0) <= 1e-12


@pytest.mark.parametrize("a", SIGNATURES)
def test_inverse_round_trip(a):
    for r in np.linspace(0.01, 0.99, 20):
        r = float(r)
        y = mu_star(a, r)
        back = mu_star_inverse(a, y)
        assert abs(back - r) <= 1e-10
        assert abs(mu_star(a, back) - y) <= 1e-12


def test_inverse_out_of_window():
    lo, hi = mu_star_range(0.5)
    assert 0.2 < lo < 0.25 and 30 < hi < 35
    for y in (0.0, -1.0, 0.9 * lo, 1.1 * hi, 1e3):
        with pytest.raises(DomainError):
            mu_star_inverse(0.5, y)


@given(st.sampled_from(SIGNATURES), st.floats(0.005, 0.995))
@settings(max_examples=80, deadline=None)
def test_inverse_property(a, r):
    assert abs(mu_star_inverse(a, mu_star(a, r)) - r) <= 1e-10


def test_phi_star_group_laws():
    a, r = 0.25, 0.3
    assert phi_star(1.0, a, r) == r
    v = phi_star(2.0, a, r)
    assert mu_star(a, v) == pytest.approx(mu_star(a, r) / 2, abs=1e-12)
    assert phi_star(2.0, a, phi_star(0.5, a, r)) == pytest.approx(r, abs=1e-10)
    assert phi_star(1.5, a, phi_star(2.0, a, r)) == pytest.approx(phi_star(3.0, a, r), abs=1e-10)


def test_closed_forms():
    r = 0.5
    expected = (9 * 0.5 * 1.75) ** (1 / 3) / 2
    assert phi3_star_closed(r) == pytest.approx(expected, rel=1e-15)
    assert phi_star(3.0, THIRD, r) == pytest.approx(expected, abs=1e-10)
    assert phi3_star_closed(FIXED) == pytest.approx(mu_star_inverse(THIRD, math.pi / 3), abs=1e-10)
    assert phi13_star_closed(phi3_star_closed(0.7)) == pytest.approx(0.7, abs=1e-14)
    assert phi3_star_closed(phi13_star_closed(0.2)) == pytest.approx(0.2, abs=1e-14)
    assert phi_star(THIRD, THIRD, 0.6) == pytest.approx(phi13_star_closed(0.6), abs=1e-10)
    s = SELF_COMP
    assert phi13_star_closed(s) == pytest.approx((1 - s) / (1 + 2 * s), rel=1e-14)
    r = 0.35
    assert phi3_star_closed(r) ** 3 + phi13_star_closed(complement(r)) ** 3 == pytest.approx(
        1.0, abs=1e-14)
    for r in np.linspace(0.05, 0.95, 10):
        assert phi3_star_closed(float(r)) > r


def test_phi13_accurate_for_small_radii():
    r = 1e-3
    exact = mpmath.mpf(r)
    rs = mpmath.cbrt(1 - exact ** 3)
    assert phi13_star_closed(r) == pytest.approx(float((1 - rs) / (1 + 2 * rs)), rel=1e-14)


@pytest.mark.parametrize("a", SIGNATURES)
def test_log_corrected_modulus(a):
    half_R = float(-2 * mpmath.euler - mpmath.digamma(a) - mpmath.digamma(1 - a)) / 2
    rs = np.linspace(0.001, 0.999, 40)
    h = [mu_star(a, float(r)) + 1.5 * math.log(r) for r in rs]
    assert all(x > y for x, y in zip(h, h[1:]))
    # the decay to 0 at r = 1 is only logarithmic
    assert 0 < mu_star(a, 1 - 1e-9) < h[-1]
    assert half_R - 1e-5 < h[0] < half_R
