"""Infinite-product representation of mu* and the bounds it gives for mu*_a.

Starting from r_0 = r* and iterating the closed-form degree-3 map
r_k = phi*_3(r_{k-1}), the starred function at a = 1/3 satisfies

    mu*(r) + (3/2) log r = (1/2) sum_{k>=0} 3^-k log[(1 + 2 r_k)(1 + r_k + r_k^2)].

Each logarithm is at most log 9, so the remainder after the k = n term is at
most 3^-n log(9) / 2. For other signatures the same sum brackets mu*_a with
an offset of (R(a) - log 27) / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .modular import _phi3, check_radius, check_signature, complement
from .specialfn import ramanujan_R

LOG9 = math.log(9.0)
LOG27 = math.log(27.0)


@dataclass(frozen=True)
class CubicOrbit:
    """r_0 = r*, r_1, ..., r_n and the truncated sum through k = n.

    ``terms`` holds r_1 ... r_n. Once an iterate rounds to 1.0 it stays
    there, so the sequence is strictly increasing only while below 1.
    """

    r0: float
    terms: tuple
    partial_log_sum: float
    tail_bound: float

    @property
    def n(self) -> int:
        return len(self.terms)


def _log_factor(x):
    return math.log((1.0 + 2.0 * x) * (1.0 + x + x * x))


def cubic_orbit(r: float, n_max: int) -> CubicOrbit:
    """Orbit of r* under phi*_3 up to r_{n_max}, with the weighted log sum."""
    r = check_radius(r)
    if int(n_max) != n_max or n_max < 0:
        raise DomainError(f"n_max must be a non-negative integer, got {n_max!r}")
    rk = complement(r)
    r0 = rk
    s = _log_factor(rk)
    w = 1.0
    terms = []
    for _ in range(int(n_max)):
        nxt = _phi3(rk)
        # once 1 - r_k is below an ulp the iterate stalls by rounding; its true
        # value rounds to 1
        rk = 1.0 if nxt <= rk else min(nxt, 1.0)
        w /= 3.0
        terms.append(rk)
        s += w * _log_factor(rk)
    return CubicOrbit(r0, tuple(terms), s, w * LOG9 / 2.0)


def depth_for(tol: float) -> int:
    """Smallest n whose tail bound satisfies tail_bound / 2 <= tol."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    n = 0
    while LOG9 / 4.0 * 3.0 ** -n > tol:
        n += 1
    return n


def log_sum(r: float, tol: float = 1e-12) -> float:
    """Sigma = sum_{k>=0} 3^-k log[(1 + 2 r_k)(1 + r_k + r_k^2)], tail midpoint included."""
    orb = cubic_orbit(r, depth_for(tol))
    return orb.partial_log_sum + orb.tail_bound / 2.0


def mu_star_product(r: float, tol: float = 1e-12) -> float:
    """mu*(r) at a = 1/3 from the orbit sum: -(3/2) log r + Sigma / 2."""
    r = check_radius(r)
    return -1.5 * math.log(r) + 0.5 * log_sum(r, tol)


def mu_star_bounds(a: float, r: float, tol: float = 1e-12) -> tuple[float, float]:
    """Lower and upper bounds for mu*_a(r) from the orbit sum.

    The two candidates are -(3/2) log r + Sigma/2 and that plus
    (R(a) - log 27)/2; they coincide at a = 1/3 and swap roles as a crosses
    1/3.
    """
    a = check_signature(a)
    base = mu_star_product(r, tol)
    shifted = base + 0.5 * (ramanujan_R(a) - LOG27)
    return (base, shifted) if shifted >= base else (shifted, base)


def phi_inv_lower_bound(a: float, r: float, K: float, tol: float = 1e-12) -> float:
    """Lower bound for phi*_{1/K}(a, r), K > 1.

    r^K exp{(1 - K)/3 (R(a) - log 27 + Sigma)} for a <= 1/3 and
    r^K exp{(1 - K) Sigma / 3} for a >= 1/3.
    """
    a = check_signature(a)
    r = check_radius(r)
    if not (isinstance(K, (int, float)) and math.isfinite(K) and K > 1):
        raise DomainError(f"K must exceed 1, got {K!r}")
    sigma = log_sum(r, tol)
    if a <= 1.0 / 3.0:
        sigma += ramanujan_R(a) - LOG27
    return r ** K * math.exp((1.0 - K) / 3.0 * sigma)


def product_form(r: float, tol: float = 1e-12) -> float:
    """prod_k [(1 + 2 r_k)(1 + r_k + r_k^2)]^(3^-k / 2), i.e. exp(Sigma / 2)."""
    return math.exp(0.5 * log_sum(r, tol))


__all__ = ["CubicOrbit", "cubic_orbit", "depth_for", "log_sum", "mu_star_product",
           "mu_star_bounds", "phi_inv_lower_bound", "product_form"]
