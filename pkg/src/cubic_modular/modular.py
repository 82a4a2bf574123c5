"""Modular functions of signature 1/a and their inverses.

``mu_star(a, r)`` is the starred modular quotient

    mu*_a(r) = pi / (2 sin(pi a)) * F(a, 1-a; 1; 1 - r^3) / F(a, 1-a; 1; r^3),

a decreasing bijection of (0, 1) onto (0, inf). ``phi_star`` solves the
starred modular equation of degree 1/K, ``mu*(phi) = mu*(r) / K``.

Throughout, cubes and their complements are passed around as pairs so that
``1 - r**3`` is never formed by cancellation when r is close to 1.
"""

from __future__ import annotations

import math

from ._numeric import cbrt
from .errors import ConvergenceError, DomainError
from .specialfn import EPS, SeriesParameters, hyp2f1, hyp2f1_value, ramanujan_R

#: Radii closer than this to 0 or 1 are rejected.
ENDPOINT_GAP = 1e-9
R_MIN = ENDPOINT_GAP
R_MAX = 1.0 - ENDPOINT_GAP

INVERSE_TOL = 1e-12
INVERSE_MAX_ITER = 200


# -- validation -------------------------------------------------------------

def check_signature(a: float) -> float:
    if not (isinstance(a, (int, float)) and math.isfinite(a)) or not 0.0 < a <= 0.5:
        raise DomainError(f"signature parameter a must lie in (0, 1/2], got {a!r}")
    return float(a)


def check_radius(r: float) -> float:
    if not (isinstance(r, (int, float)) and math.isfinite(r)) or not R_MIN <= r <= R_MAX:
        raise DomainError(f"radius must lie in [{R_MIN}, 1 - {ENDPOINT_GAP}], got {r!r}")
    return float(r)


def check_degree(K: float) -> float:
    if not (isinstance(K, (int, float)) and math.isfinite(K)) or K <= 0:
        raise DomainError(f"degree K must be positive, got {K!r}")
    return float(K)


def half_period(a: float) -> float:
    """pi / (2 sin(pi a)), the value of mu*_a at the self-complementary radius."""
    return math.pi / (2.0 * math.sin(math.pi * a))


def cocube(r: float) -> float:
    """1 - r**3 computed without cancellation."""
    return (1.0 - r) * (1.0 + r + r * r)


# -- complement -------------------------------------------------------------

def complement(r: float) -> float:
    """Cubic complementary radius r* = (1 - r^3)^(1/3)."""
    r = check_radius(r)
    return cbrt(cocube(r))


def _one_minus_complement(r: float, rs: float) -> float:
    # 1 - r* = r^3 / (1 + r* + r*^2)
    return r ** 3 / (1.0 + rs + rs * rs)


# -- mu_a and mu*_a ---------------------------------------------------------

def mu_a(a: float, r: float) -> float:
    """Unstarred quotient pi/(2 sin pi a) * F(a,1-a;1;1-r^2) / F(a,1-a;1;r^2)."""
    a = check_signature(a)
    r = check_radius(r)
    sq = r * r
    co = (1.0 - r) * (1.0 + r)
    num = hyp2f1_value(a, 1.0 - a, 1.0, co, xc=sq)
    den = hyp2f1_value(a, 1.0 - a, 1.0, sq, xc=co)
    return half_period(a) * num / den


def mu_star_cube(a: float, cube: float, cube_c: float | None = None) -> float:
    """mu*_a at the radius whose cube is ``cube``.

    ``cube_c`` is ``1 - cube`` when it is known more accurately than by
    subtraction.
    """
    a = check_signature(a)
    if cube_c is None:
        cube_c = 1.0 - cube
    if not (0.0 < cube <= 1.0 and 0.0 < cube_c <= 1.0):
        raise DomainError(f"cube of the radius must lie in (0, 1), got {cube!r}")
    num = hyp2f1_value(a, 1.0 - a, 1.0, cube_c, xc=cube)
    den = hyp2f1_value(a, 1.0 - a, 1.0, cube, xc=cube_c)
    return half_period(a) * num / den


def mu_star(a: float, r: float) -> float:
    """Starred modular function mu*_a(r) = mu_a(r^(3/2)).

    Parameters
    ----------
    a : float
        Signature parameter in (0, 1/2].
    r : float
        Radius in (0, 1), at least 1e-9 away from either end.

    Returns
    -------
    float
        Strictly decreasing in r, with mu*(r) * mu*(r*) = (pi / (2 sin pi a))^2.
    """
    a = check_signature(a)
    r = check_radius(r)
    return mu_star_cube(a, r ** 3, cocube(r))


def mu_star_with_error(a: float, r: float) -> tuple[float, float]:
    """mu*_a(r) together with an absolute error estimate from the two series."""
    a = check_signature(a)
    r = check_radius(r)
    p = SeriesParameters(a, 1.0 - a, 1.0)
    cube, cube_c = r ** 3, cocube(r)
    num = hyp2f1(p, cube_c, xc=cube)
    den = hyp2f1(p, cube, xc=cube_c)
    value = half_period(a) * num.value / den.value
    rel = num.abs_error_estimate / abs(num.value) + den.abs_error_estimate / abs(den.value)
    return value, abs(value) * (rel + 4.0 * EPS)


def _mu_star_and_slope(a, r):
    cube, cube_c = r ** 3, cocube(r)
    den = hyp2f1_value(a, 1.0 - a, 1.0, cube, xc=cube_c)
    num = hyp2f1_value(a, 1.0 - a, 1.0, cube_c, xc=cube)
    return half_period(a) * num / den, -1.5 / (r * cube_c * den * den)


def mu_star_derivative(a: float, r: float) -> float:
    """d mu*_a / dr = -(3/2) / (r (1 - r^3) F(a, 1-a; 1; r^3)^2)."""
    a = check_signature(a)
    r = check_radius(r)
    return _mu_star_and_slope(a, r)[1]


def mu_star_range(a: float) -> tuple[float, float]:
    """Values of mu*_a reachable from admissible radii, as (low, high)."""
    a = check_signature(a)
    return mu_star(a, R_MAX), mu_star(a, R_MIN)


def _initial_radius(a, y):
    # mu* ~ R(a)/2 - (3/2) log r near 0; use the complement relation near 1
    k = half_period(a)
    half_R = ramanujan_R(a) / 2.0
    if y >= k:
        r = math.exp((half_R - y) / 1.5)
    else:
        rs = math.exp((half_R - k * k / y) / 1.5)
        r = cbrt(max(1.0 - rs ** 3, 0.0))
    return min(max(r, R_MIN), R_MAX)


def mu_star_inverse(a: float, y: float) -> float:
    """The radius r with mu*_a(r) = y.

    Safeguarded Newton iteration on the bracket [1e-9, 1 - 1e-9] using the
    closed-form derivative; any Newton step leaving the current bracket is
    replaced by bisection. Stops once ``|mu*(r) - y| <= 1e-12``.

    Raises
    ------
    DomainError
        If y is not positive or lies outside ``mu_star_range(a)``; the
        endpoint policy makes only a finite window of values invertible.
    ConvergenceError
        If 200 iterations do not reach the tolerance.
    """
    a = check_signature(a)
    if not (isinstance(y, (int, float)) and math.isfinite(y)) or y <= 0:
        raise DomainError(f"mu* only takes positive values, got {y!r}")
    lo, hi = R_MIN, R_MAX
    y_hi, y_lo = mu_star(a, lo), mu_star(a, hi)
    if not y_lo <= y <= y_hi:
        raise DomainError(
            f"y = {y!r} lies outside [{y_lo:.6g}, {y_hi:.6g}], the values taken on "
            f"radii at least {ENDPOINT_GAP} from the ends of (0, 1)")
    r = _initial_radius(a, y)
    for _ in range(INVERSE_MAX_ITER):
        val, slope = _mu_star_and_slope(a, r)
        res = val - y
        if abs(res) <= INVERSE_TOL:
            return r
        # mu* is decreasing: a positive residual means r is too small
        if res > 0:
            lo = r
        else:
            hi = r
        if hi - lo <= 4.0 * math.ulp(hi):
            return r
        step = r - res / slope
        r = step if lo < step < hi else 0.5 * (lo + hi)
    raise ConvergenceError(f"mu* inversion for y = {y!r} did not converge")


# -- solutions of the modular equation --------------------------------------

def phi_star(K: float, a: float, r: float) -> float:
    """phi*_K(a, r) = mu*^-1(mu*(r) / K)."""
    K = check_degree(K)
    a = check_signature(a)
    r = check_radius(r)
    if K == 1.0:
        return r
    return mu_star_inverse(a, mu_star(a, r) / K)


def phi3_cube(r: float) -> tuple[float, float]:
    """phi*_3(r)^3 and its complement, (9r(1+r+r^2)/(1+2r)^3, ((1-r)/(1+2r))^3)."""
    d = 1.0 + 2.0 * r
    return 9.0 * r * (1.0 + r + r * r) / d ** 3, ((1.0 - r) / d) ** 3


def _phi3(r):
    # unchecked closed form; also defined at r = 1, where it is 1
    return cbrt(9.0 * r * (1.0 + r + r * r)) / (1.0 + 2.0 * r)


def phi3_star_closed(r: float) -> float:
    """Closed form of phi*_3 at a = 1/3: (9r(1+r+r^2))^(1/3) / (1+2r)."""
    return _phi3(check_radius(r))


def phi13_star_closed(r: float) -> float:
    """Closed form of phi*_{1/3} at a = 1/3: (1 - r*)/(1 + 2 r*)."""
    r = check_radius(r)
    rs = cbrt(cocube(r))
    return _one_minus_complement(r, rs) / (1.0 + 2.0 * rs)
