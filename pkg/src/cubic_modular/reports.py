"""Per-check verification records."""

from __future__ import annotations

import math
from dataclasses import dataclass

EQUALITY = "equality"
ONE_SIDED = "one-sided"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one numerical check at one sample point.

    ``margin`` is ``rhs - lhs``. A one-sided check claims ``lhs <= rhs`` and
    passes iff ``margin >= -tolerance``; an equality check passes iff
    ``|margin| <= tolerance``. Non-finite margins never pass.
    """

    check_id: str
    sample_point: tuple
    lhs: float
    rhs: float
    margin: float
    passed: bool
    note: str = ""
    kind: str = ONE_SIDED
    tolerance: float = 0.0
    a: float | None = None
    r: float | None = None

    @classmethod
    def build(cls, check_id, kind, lhs, rhs, tolerance, *, sample_point=(), a=None,
              r=None, note="", margin=None):
        lhs, rhs = float(lhs), float(rhs)
        if margin is None:
            margin = rhs - lhs
        margin = float(margin)
        if not math.isfinite(margin):
            passed = False
        elif kind == EQUALITY:
            passed = abs(margin) <= tolerance
        elif kind == ONE_SIDED:
            passed = margin >= -tolerance
        else:
            raise ValueError(f"unknown check kind {kind!r}")
        if not sample_point:
            sample_point = tuple(v for v in (a, r) if v is not None)
        return cls(check_id, tuple(float(v) for v in sample_point), lhs, rhs, margin,
                   passed, note, kind, float(tolerance), a, r)

    @classmethod
    def equality(cls, check_id, lhs, rhs, tolerance, **kw):
        return cls.build(check_id, EQUALITY, lhs, rhs, tolerance, **kw)

    @classmethod
    def at_most(cls, check_id, lhs, rhs, tolerance, **kw):
        """Report for the claim ``lhs <= rhs``."""
        return cls.build(check_id, ONE_SIDED, lhs, rhs, tolerance, **kw)


def all_passed(reports) -> bool:
    return all(rep.passed for rep in reports)
