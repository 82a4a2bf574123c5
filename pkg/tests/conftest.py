import mpmath
import pytest

mpmath.mp.dps = 40

SIGNATURES = (0.1, 0.2, 1.0 / 3.0, 0.4, 0.5)


@pytest.fixture
def mp():
    return mpmath


def mp_mu_star(a, r):
    """High-precision mu*_a(r) from mpmath's hypergeometric function."""
    a = mpmath.mpf(a)
    r = mpmath.mpf(r)
    q = mpmath.hyp2f1(a, 1 - a, 1, 1 - r ** 3) / mpmath.hyp2f1(a, 1 - a, 1, r ** 3)
    return mpmath.pi / (2 * mpmath.sin(mpmath.pi * a)) * q
