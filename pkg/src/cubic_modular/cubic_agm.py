"""Borwein cubic arithmetic-geometric mean and the transformations it encodes.

One step maps (a, b) to ((a + 2b)/3, [b (a^2 + a b + b^2) / 3]^(1/3)). The
common limit M(a, b) is positively homogeneous and satisfies

    1 / M(1, x) = F(1/3, 2/3; 1; 1 - x^3),
    1 / M(x, 1) = F(1/3, 1/3; 1; 1 - x^3).

The second identity yields a cubic transformation of F(1/3, 1/3; 1; .) which
``check_f1313_cubic_transform`` verifies numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._numeric import cbrt
from .errors import ConvergenceError, DomainError
from .reports import VerificationReport
from .specialfn import hyp2f1_value

MAX_STEPS = 64
THIRD = 1.0 / 3.0


@dataclass(frozen=True)
class AgmState:
    a_n: float
    b_n: float
    n: int = 0

    def __post_init__(self):
        if not (self.a_n > 0 and self.b_n > 0) or not math.isfinite(self.a_n + self.b_n):
            raise DomainError(f"cubic AGM needs positive finite terms, got {self.a_n!r}, {self.b_n!r}")
        if self.n < 0:
            raise DomainError("step counter must be non-negative")

    @property
    def gap(self) -> float:
        return abs(self.a_n - self.b_n)


def agm_step(st: AgmState) -> AgmState:
    a, b = st.a_n, st.b_n
    return AgmState((a + 2.0 * b) / 3.0, cbrt(b * (a * a + a * b + b * b) / 3.0), st.n + 1)


def agm_iterate(a: float, b: float, tol: float = 1e-15) -> AgmState:
    """Iterate from (a, b) until ``|a_n - b_n| <= tol * a_n``; return the final state."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    st = AgmState(float(a), float(b))
    while st.gap > tol * st.a_n:
        if st.n >= MAX_STEPS:
            raise ConvergenceError(f"cubic AGM gap still {st.gap:.3g} after {MAX_STEPS} steps")
        st = agm_step(st)
    return st


def agm_limit(a: float, b: float, tol: float = 1e-15) -> float:
    """Common limit of the cubic AGM started at (a, b), reported as a_n."""
    return agm_iterate(a, b, tol).a_n


def _check_unit(x):
    if not (isinstance(x, (int, float)) and 0.0 < x < 1.0):
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    return float(x)


# -- limit identities -------------------------------------------------------

def check_agm_limit_case_a(x: float, tol: float = 1e-12) -> VerificationReport:
    """M(1, x) * F(1/3, 2/3; 1; 1 - x^3) = 1."""
    x = _check_unit(x)
    cube_c = (1.0 - x) * (1.0 + x + x * x)
    lhs = agm_limit(1.0, x) * hyp2f1_value(THIRD, 2.0 * THIRD, 1.0, cube_c, xc=x ** 3)
    return VerificationReport.equality("agm_limit_case_a", lhs, 1.0, tol, r=x)


def check_agm_limit_case_b(x: float, tol: float = 1e-12) -> VerificationReport:
    """M(x, 1) * F(1/3, 1/3; 1; 1 - x^3) = 1."""
    x = _check_unit(x)
    cube_c = (1.0 - x) * (1.0 + x + x * x)
    lhs = agm_limit(x, 1.0) * hyp2f1_value(THIRD, THIRD, 1.0, cube_c, xc=x ** 3)
    return VerificationReport.equality("agm_limit_case_b", lhs, 1.0, tol, r=x)


def check_agm_one_step(x: float, tol: float = 1e-12) -> VerificationReport:
    """M(x, 1) = ((x^2+x+1)/3)^(1/3) M((x+2)/(9(x^2+x+1))^(1/3), 1), one step unrolled."""
    x = _check_unit(x)
    q = x * x + x + 1.0
    lhs = agm_limit(x, 1.0)
    rhs = cbrt(q / 3.0) * agm_limit((x + 2.0) / cbrt(9.0 * q), 1.0)
    return VerificationReport.equality("agm_one_step", lhs, rhs, tol, r=x)


# -- transformations of F(1/3, 1/3; 1; .) ------------------------------------

def check_f1313_cubic_transform(x: float, tol: float = 1e-11) -> VerificationReport:
    """F(1/3,1/3;1;1-x^3) = (3/(x^2+x+1))^(1/3) F(1/3,1/3;1;(1-x)^3/(9(x^2+x+1)))."""
    x = _check_unit(x)
    q = x * x + x + 1.0
    lhs = hyp2f1_value(THIRD, THIRD, 1.0, (1.0 - x) * q, xc=x ** 3)
    rhs = cbrt(3.0 / q) * hyp2f1_value(THIRD, THIRD, 1.0, (1.0 - x) ** 3 / (9.0 * q))
    return VerificationReport.equality("f1313_cubic_transform", lhs, rhs, tol, r=x)


def _one_minus_hat(x):
    # 1 - (1 - x)^(1/3) without cancellation for small x
    xh = cbrt(1.0 - x)
    return xh, x / (1.0 + xh + xh * xh)


def t_map(x: float) -> float:
    """t(x) = (1 - xh)^3 / (9 (xh^2 + xh + 1)) with xh = (1 - x)^(1/3)."""
    xh, d = _one_minus_hat(_check_unit(x))
    return d ** 3 / (9.0 * (xh * xh + xh + 1.0))


def t_map_derivative(x: float) -> float:
    """t'(x) = (1 - xh)^2 (xh + 2)^2 / (27 xh^2 (xh^2 + xh + 1)^2)."""
    xh, d = _one_minus_hat(_check_unit(x))
    q = xh * xh + xh + 1.0
    return d * d * (xh + 2.0) ** 2 / (27.0 * xh * xh * q * q)


def g_scaled(x: float) -> float:
    """G(x) = x^(1/2) (1 - x)^(1/3) F(1/3, 1/3; 1; x)."""
    x = _check_unit(x)
    return math.sqrt(x) * cbrt(1.0 - x) * hyp2f1_value(THIRD, THIRD, 1.0, x)


def check_scaled_f1313_functional_equation(x: float, tol: float = 1e-10) -> VerificationReport:
    """G(x) / G(t(x)) = sqrt(3 / t'(x))."""
    x = _check_unit(x)
    lhs = g_scaled(x) / g_scaled(t_map(x))
    rhs = math.sqrt(3.0 / t_map_derivative(x))
    return VerificationReport.equality("scaled_f1313_functional_equation", lhs, rhs, tol,
                                       r=x)
