"""Scalar special functions and hypergeometric-type power series.

Gamma, digamma, beta, the Ramanujan constant ``R(a, b)`` and the series
F(a, b; c; x), Phi(p, q; x) and the generalized Bessel function ``u_v``.

F is summed directly for ``x <= 0.75``. Above that point it is rebuilt
from series in ``1 - x`` through the Gauss connection formulas. When
``c - a - b`` is an integer the logarithmic forms are used, the
zero-balanced case ``c = a + b`` among them. Callers that know ``1 - x``
more accurately than the float ``1 - x`` (for example ``r**3`` when
``x = 1 - r**3``) should pass it as ``xc``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import ConvergenceError, DomainError, ParameterError

EULER_GAMMA = 0.57721566490153286060651209008240243
EPS = 2.220446049250313e-16

#: Distance to an integer below which a float counts as that integer.
INTEGER_TOL = 1e-12

#: Above this argument F is evaluated through a connection formula.
CROSSOVER = 0.75


def _near_int(v: float) -> int | None:
    k = round(v)
    if abs(v - k) < INTEGER_TOL:
        return int(k)
    return None


def _is_nonpositive_int(v: float) -> bool:
    k = _near_int(v)
    return k is not None and k <= 0


@dataclass(frozen=True)
class SeriesParameters:
    """Parameters (a, b, c) of F(a, b; c; x); c may not be 0, -1, -2, ..."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")
        if _is_nonpositive_int(self.c):
            raise ParameterError(f"c = {self.c!r} is a non-positive integer")

    @property
    def zero_balanced(self) -> bool:
        return abs(self.c - self.a - self.b) < INTEGER_TOL


@dataclass(frozen=True)
class EvalOptions:
    rel_tol: float = 1e-15
    max_terms: int = 10_000

    def __post_init__(self):
        if not 0 < self.rel_tol < 1:
            raise ParameterError("rel_tol must lie in (0, 1)")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ParameterError("max_terms must be a positive integer")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class EvalResult:
    """A series value with its error estimate and the number of terms summed.

    ``abs_error_estimate`` is a geometric tail estimate (never less than twice
    the last term) plus a bound on the
    rounding accumulated while summing; for connection formulas the
    contributions of each series are combined.
    """

    value: float
    abs_error_estimate: float
    terms_used: int

    def __float__(self):
        return self.value


# -- Gamma family -----------------------------------------------------------

def _positive(name, x):
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or x <= 0:
        raise DomainError(f"{name} requires a finite positive argument, got {x!r}")
    return float(x)


def gamma_fn(x: float) -> float:
    """Gamma function for x > 0.

    Raises DomainError for x <= 0 and OverflowError once the value exceeds
    the double range (x > 171.62...).
    """
    x = _positive("gamma_fn", x)
    return math.gamma(x)


def _rgamma(x: float) -> float:
    """1/Gamma(x) for any real x; zero at the poles."""
    if _is_nonpositive_int(x):
        return 0.0
    if x > 171.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def _psi(x: float) -> float:
    if _is_nonpositive_int(x):
        raise DomainError(f"digamma has a pole at {x!r}")
    if x < 0.5:
        return _psi(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    # Bernoulli tail B_2k / (2k x^2k), k = 1..7
    tail = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (
        1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (
            1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))))
    return acc + math.log(x) - 0.5 / x - tail


def digamma(x: float) -> float:
    """Logarithmic derivative of the gamma function, for x > 0."""
    return _psi(_positive("digamma", x))


def beta_fn(x: float, y: float) -> float:
    """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for x, y > 0."""
    x = _positive("beta_fn", x)
    y = _positive("beta_fn", y)
    if x + y < 171.0:
        return math.gamma(x) * math.gamma(y) / math.gamma(x + y)
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def euler_gamma() -> float:
    return EULER_GAMMA


def ramanujan_R(a: float, b: float | None = None) -> float:
    """R(a, b) = -2*gamma - psi(a) - psi(b); the one-argument form is R(a, 1 - a)."""
    a = _positive("ramanujan_R", a)
    b = 1.0 - a if b is None else _positive("ramanujan_R", b)
    if b <= 0:
        raise DomainError("one-argument R(a) needs 0 < a < 1")
    return -2.0 * EULER_GAMMA - _psi(a) - _psi(b)


# -- Gauss hypergeometric function ------------------------------------------

def _unit_argument(x, xc):
    # x may round to 1.0 when a positive complement is supplied separately
    top_ok = x < 1 or (x == 1 and xc is not None and xc > 0)
    if not math.isfinite(x) or x < 0 or not top_ok:
        raise DomainError(f"argument must lie in [0, 1), got {x!r}")
    if xc is None:
        xc = 1.0 - x
    elif not (0 < xc <= 1) or abs((x + xc) - 1.0) > 1e-12:
        raise DomainError(f"complement {xc!r} is inconsistent with x = {x!r}")
    return float(x), float(xc)


def _run(kernel_out, what):
    value, tail, n, rounding, ok = kernel_out
    if not ok:
        raise ConvergenceError(f"{what}: stopping rule not reached after {n} terms")
    return value, tail + rounding, n


def _direct(a, b, c, x, opts):
    value, err, n = _run(kernels.gauss_series(a, b, c, x, opts.rel_tol, opts.max_terms),
                         "hypergeometric series")
    return EvalResult(value, err, n)


def _log_sum(alpha, beta, m, xc, opts):
    c0 = 1.0 / math.factorial(m)
    psi_m1 = -EULER_GAMMA + math.fsum(1.0 / k for k in range(1, m + 1))
    out = kernels.log_series(alpha, beta, m, xc, math.log(xc), c0,
                             _psi(alpha), _psi(beta), -EULER_GAMMA, psi_m1,
                             opts.rel_tol, opts.max_terms)
    return _run(out, "logarithmic connection series")


def _finite_sum(a, b, m, xc):
    # sum_{n<m} (a,n)(b,n) / (n! (1-m,n)) xc^n
    t, s = 1.0, 1.0
    for n in range(m - 1):
        t *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * xc
        s += t
    return s


def _connection(a, b, c, xc, opts):
    """F(a, b; c; 1 - xc) from series in xc (Abramowitz & Stegun 15.3.6-12)."""
    s = c - a - b
    m = _near_int(s)
    parts = []  # (coefficient, value, error, terms)
    if m is None:
        gc = math.gamma(c)
        A = gc * math.gamma(s) * _rgamma(c - a) * _rgamma(c - b)
        B = gc * math.gamma(-s) * _rgamma(a) * _rgamma(b) * xc ** s
        if A != 0.0:
            parts.append((A, *_run(kernels.gauss_series(a, b, 1.0 - s, xc, opts.rel_tol,
                                                        opts.max_terms), "connection series")))
        if B != 0.0:
            parts.append((B, *_run(kernels.gauss_series(c - a, c - b, 1.0 + s, xc,
                                                        opts.rel_tol, opts.max_terms),
                                   "connection series")))
    elif m >= 0:
        gc = math.gamma(c)
        if m > 0:
            A = math.gamma(m) * gc * _rgamma(a + m) * _rgamma(b + m)
            if A != 0.0:
                parts.append((A, _finite_sum(a, b, m, xc), 0.0, m))
        B = (-1.0) ** (m + 1) * xc ** m * gc * _rgamma(a) * _rgamma(b)
        if B != 0.0:
            parts.append((B, *_log_sum(a + m, b + m, m, xc, opts)))
    else:
        k = -m
        gc = math.gamma(c)
        A = math.gamma(k) * gc * _rgamma(a) * _rgamma(b) * xc ** (-k)
        if A != 0.0:
            parts.append((A, _finite_sum(a - k, b - k, k, xc), 0.0, k))
        B = -((-1.0) ** k) * gc * _rgamma(a - k) * _rgamma(b - k)
        if B != 0.0:
            parts.append((B, *_log_sum(a, b, k, xc, opts)))
    value = math.fsum(coef * v for coef, v, _, _ in parts)
    err = sum(abs(coef) * e + 32 * EPS * abs(coef * v) for coef, v, e, _ in parts)
    terms = sum(n for *_, n in parts)
    return EvalResult(value, err, terms)


def hyp2f1(p: SeriesParameters, x: float, opts: EvalOptions | None = None, *,
           xc: float | None = None) -> EvalResult:
    """Gauss hypergeometric function F(a, b; c; x) on 0 <= x < 1.

    Parameters
    ----------
    p : SeriesParameters
    x : float
        Argument in [0, 1).
    opts : EvalOptions, optional
        Relative tolerance and term cap for every series involved.
    xc : float, optional
        Accurately known value of ``1 - x``; used by the connection formulas,
        which carry all of the precision near x = 1.

    Raises
    ------
    ParameterError
        If c is a non-positive integer.
    ConvergenceError
        If a series exhausts ``opts.max_terms``.
    """
    if not isinstance(p, SeriesParameters):
        p = SeriesParameters(*p)
    opts = opts or DEFAULT_OPTIONS
    x, xc = _unit_argument(x, xc)
    if x == 0.0:
        return EvalResult(1.0, 0.0, 1)
    a, b, c = p.a, p.b, p.c
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        # terminating series: exact polynomial, valid for every x
        if _is_nonpositive_int(a):
            a = float(round(a))
        if _is_nonpositive_int(b):
            b = float(round(b))
        return _direct(a, b, c, x, opts)
    if x <= CROSSOVER:
        return _direct(a, b, c, x, opts)
    return _connection(a, b, c, xc, opts)


def hyp2f1_value(a: float, b: float, c: float, x: float, xc: float | None = None) -> float:
    """Shorthand returning only the value of F(a, b; c; x)."""
    return hyp2f1(SeriesParameters(a, b, c), x, xc=xc).value


# -- confluent series -------------------------------------------------------

def kummer_phi(pp: float, q: float, x: float, opts: EvalOptions | None = None) -> EvalResult:
    """Kummer function Phi(p, q; x) = sum (p,n)/(q,n) x^n/n! on [0, 1)."""
    opts = opts or DEFAULT_OPTIONS
    if _is_nonpositive_int(q):
        raise ParameterError(f"q = {q!r} is a non-positive integer")
    x, _ = _unit_argument(x, None)
    value, err, n = _run(kernels.kummer_series(pp, q, x, opts.rel_tol, opts.max_terms),
                         "Kummer series")
    return EvalResult(value, err, n)


def bessel_u(v: float, b: float, c: float, x: float,
             opts: EvalOptions | None = None) -> EvalResult:
    """Generalized Bessel function u_v(x) = sum (-c/4)^n / (kappa,n) x^n/n!,
    kappa = v + (b + 1)/2, on [0, 1)."""
    opts = opts or DEFAULT_OPTIONS
    kappa = v + (b + 1.0) / 2.0
    if _is_nonpositive_int(kappa):
        raise ParameterError(f"kappa = {kappa!r} is a non-positive integer")
    x, _ = _unit_argument(x, None)
    value, err, n = _run(kernels.bessel_series(kappa, -c * x / 4.0, opts.rel_tol,
                                               opts.max_terms), "Bessel series")
    return EvalResult(value, err, n)
