"""Pure-Python series kernels.

Reference implementation of the inner loops; ``_ckernels.pyx`` mirrors it
operation for operation. Every kernel returns a tuple
``(value, tail_estimate, terms_used, rounding_bound, converged)``.

Stopping rule shared by all kernels: stop once ``|term| <= rel_tol * |sum|``
holds for two consecutive terms. ``tail_estimate`` is
``|last| * max(2, rho / (1 - rho))`` with ``rho`` the ratio of the last two
terms (or the limiting ratio when larger), so twice the last term is
a floor. ``rounding_bound`` is a running
``eps * sum((4n + k) * |term_n|)`` bound on accumulated rounding.
"""

EPS = 2.220446049250313e-16


def _tail(last, prev, limit):
    # term ratios approach ``limit``; use whichever of the two is larger
    if prev > 0.0:
        rho = max(last / prev, limit)
        if rho < 1.0:
            return last * max(2.0, rho / (1.0 - rho))
    return 2.0 * last


def gauss_series(a, b, c, x, rel_tol, max_terms):
    """Partial sums of the Gauss series F(a, b; c; x)."""
    t = 1.0
    s = 1.0
    w = 4.0
    at = 1.0
    small = 0
    n = 0
    while n + 1 < max_terms:
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        n += 1
        s += t
        prev = at
        at = abs(t)
        w += (4.0 * n + 4.0) * at
        if at <= rel_tol * abs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, abs(x)), n + 1, EPS * w, True
        else:
            small = 0
    return s, abs(t), n + 1, EPS * w, False


def log_series(alpha, beta, m, xc, log_xc, c0, psi_alpha, psi_beta, psi_1,
               psi_m1, rel_tol, max_terms):
    """Logarithmic connection sum

        sum_n c_n * [psi(alpha+n) + psi(beta+n) - psi(n+1) - psi(n+m+1) + log xc]

    with ``c_n = (alpha,n)(beta,n) / (n! (n+m)!) * xc**n`` and ``c_0 = c0``.
    The digamma values are advanced by their unit-step recurrence.
    """
    c = c0
    pa = psi_alpha
    pb = psi_beta
    p1 = psi_1
    pm = psi_m1
    t = c * (pa + pb - p1 - pm + log_xc)
    s = t
    at = abs(t)
    w = 8.0 * abs(c) * (abs(pa) + abs(pb) + abs(p1) + abs(pm) + abs(log_xc))
    small = 0
    n = 0
    while n + 1 < max_terms:
        c *= (alpha + n) * (beta + n) / ((n + 1.0) * (n + m + 1.0)) * xc
        pa += 1.0 / (alpha + n)
        pb += 1.0 / (beta + n)
        p1 += 1.0 / (n + 1.0)
        pm += 1.0 / (n + m + 1.0)
        n += 1
        t = c * (pa + pb - p1 - pm + log_xc)
        s += t
        prev = at
        at = abs(t)
        w += (4.0 * n + 8.0) * abs(c) * (abs(pa) + abs(pb) + abs(p1) + abs(pm) + abs(log_xc))
        if at <= rel_tol * abs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, abs(xc)), n + 1, EPS * w, True
        else:
            small = 0
    return s, abs(t), n + 1, EPS * w, False


def kummer_series(p, q, x, rel_tol, max_terms):
    """Partial sums of sum (p,n)/(q,n) x^n/n!."""
    t = 1.0
    s = 1.0
    w = 4.0
    at = 1.0
    small = 0
    n = 0
    while n + 1 < max_terms:
        t *= (p + n) / ((q + n) * (n + 1.0)) * x
        n += 1
        s += t
        prev = at
        at = abs(t)
        w += (4.0 * n + 4.0) * at
        if at <= rel_tol * abs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, 0.0), n + 1, EPS * w, True
        else:
            small = 0
    return s, abs(t), n + 1, EPS * w, False


def bessel_series(kappa, z, rel_tol, max_terms):
    """Partial sums of sum z^n / ((kappa,n) n!)."""
    t = 1.0
    s = 1.0
    w = 4.0
    at = 1.0
    small = 0
    n = 0
    while n + 1 < max_terms:
        t *= z / ((kappa + n) * (n + 1.0))
        n += 1
        s += t
        prev = at
        at = abs(t)
        w += (4.0 * n + 4.0) * at
        if at <= rel_tol * abs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, 0.0), n + 1, EPS * w, True
        else:
            small = 0
    return s, abs(t), n + 1, EPS * w, False
