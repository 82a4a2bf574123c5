"""Small floating-point helpers shared by the modules."""

import math


def cbrt(x: float) -> float:
    """Real cube root of a non-negative float, polished by one Newton step."""
    assert x >= 0.0, "cube roots are only taken of non-negative bases"
    if x == 0.0 or math.isinf(x):
        return x
    y = x ** (1.0 / 3.0)
    return y - (y * y * y - x) / (3.0 * y * y)
