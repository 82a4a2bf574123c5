# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels; same contract and operation order as _pykernels."""

from libc.math cimport fabs

cdef double EPS = 2.220446049250313e-16


cdef inline double _tail(double last, double prev, double limit):
    cdef double rho
    if prev > 0.0:
        rho = max(last / prev, limit)
        if rho < 1.0:
            return last * max(2.0, rho / (1.0 - rho))
    return 2.0 * last


def gauss_series(double a, double b, double c, double x, double rel_tol,
                 long max_terms):
    cdef double t = 1.0, s = 1.0, w = 4.0, at = 1.0, prev
    cdef int small = 0
    cdef long n = 0
    while n + 1 < max_terms:
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        n += 1
        s += t
        prev = at
        at = fabs(t)
        w += (4.0 * n + 4.0) * at
        if at <= rel_tol * fabs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, fabs(x)), n + 1, EPS * w, True
        else:
            small = 0
    return s, fabs(t), n + 1, EPS * w, False


def log_series(double alpha, double beta, long m, double xc, double log_xc,
               double c0, double psi_alpha, double psi_beta, double psi_1,
               double psi_m1, double rel_tol, long max_terms):
    cdef double c = c0, pa = psi_alpha, pb = psi_beta, p1 = psi_1, pm = psi_m1
    cdef double t, s, w, at, prev
    cdef int small = 0
    cdef long n = 0
    t = c * (pa + pb - p1 - pm + log_xc)
    s = t
    at = fabs(t)
    w = 8.0 * fabs(c) * (fabs(pa) + fabs(pb) + fabs(p1) + fabs(pm) + fabs(log_xc))
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
        at = fabs(t)
        w += (4.0 * n + 8.0) * fabs(c) * (fabs(pa) + fabs(pb) + fabs(p1) + fabs(pm) + fabs(log_xc))
        if at <= rel_tol * fabs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, fabs(xc)), n + 1, EPS * w, True
        else:
            small = 0
    return s, fabs(t), n + 1, EPS * w, False


def kummer_series(double p, double q, double x, double rel_tol, long max_terms):
    cdef double t = 1.0, s = 1.0, w = 4.0, at = 1.0, prev
    cdef int small = 0
    cdef long n = 0
    while n + 1 < max_terms:
        t *= (p + n) / ((q + n) * (n + 1.0)) * x
        n += 1
        s += t
        prev = at
        at = fabs(t)
        w += (4.0 * n + 4.0) * at
        if at <= rel_tol * fabs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, 0.0), n + 1, EPS * w, True
        else:
            small = 0
    return s, fabs(t), n + 1, EPS * w, False


def bessel_series(double kappa, double z, double rel_tol, long max_terms):
    cdef double t = 1.0, s = 1.0, w = 4.0, at = 1.0, prev
    cdef int small = 0
    cdef long n = 0
    while n + 1 < max_terms:
        t *= z / ((kappa + n) * (n + 1.0))
        n += 1
        s += t
        prev = at
        at = fabs(t)
        w += (4.0 * n + 4.0) * at
        if at <= rel_tol * fabs(s):
            small += 1
            if small == 2:
                return s, _tail(at, prev, 0.0), n + 1, EPS * w, True
        else:
            small = 0
    return s, fabs(t), n + 1, EPS * w, False
