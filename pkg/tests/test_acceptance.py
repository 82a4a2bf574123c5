"""Acceptance criteria, one test per criterion.

Each test prints a ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line to the terminal, bypassing pytest's output capture. Run directly with
``python3 tests/test_acceptance.py`` for the summary lines alone.
"""

import math
import subprocess
import sys
import time

import mpmath
import numpy as np
import pytest

from cubic_modular import cubic_agm, modular, product_expansion, verifier
from cubic_modular.cubic_agm import AgmState, agm_step
from cubic_modular.reports import EQUALITY, ONE_SIDED
from cubic_modular.specialfn import hyp2f1_value

THIRD = 1.0 / 3.0
SIGNATURES = (0.1, 0.2, THIRD, 0.4, 0.5)
TIME_BUDGET = 60.0

# identities and inequalities making up the inequality suite (criterion 6)
INEQUALITY_PREFIXES = ("zero_balanced_", "quotient_", "bessel_", "kummer_", "series_ratio",
                       "log_corrected_", "dual_log_", "trisection_", "orbit_bound",
                       "signature_comparison_", "inverse_lower_bound", "product_tail_bound")


def _emit(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(line, flush=True)
    return ok


def criterion_1():
    rs = np.linspace(0.02, 0.98, 50)
    worst = 0.0
    for r in rs:
        for rep in verifier.check_cubic_transformation(float(r)):
            worst = max(worst, abs(rep.margin))
    return worst <= 1e-11, f"cubic transformation worst residual {worst:.2e} <= 1e-11 at 50 r"


def criterion_2():
    xs = np.linspace(0.02, 0.98, 20)
    worst, max_steps = 0.0, 0
    for x in map(float, xs):
        cube_c = (1.0 - x) * (1.0 + x + x * x)
        fa = hyp2f1_value(THIRD, 2 * THIRD, 1.0, cube_c, xc=x ** 3)
        fb = hyp2f1_value(THIRD, THIRD, 1.0, cube_c, xc=x ** 3)
        worst = max(worst, abs(cubic_agm.agm_limit(1.0, x) * fa - 1.0),
                    abs(cubic_agm.agm_limit(x, 1.0) * fb - 1.0))
        for start in ((1.0, x), (x, 1.0)):
            st = AgmState(*start)
            while st.gap > 1e-15:
                st = agm_step(st)
            max_steps = max(max_steps, st.n)
    ok = worst <= 1e-12 and max_steps <= 8
    return ok, f"AGM limits worst {worst:.2e} <= 1e-12, {max_steps} <= 8 steps to 1e-15 gap"


def criterion_3():
    worst_t = max(abs(cubic_agm.check_f1313_cubic_transform(float(x)).margin)
                  for x in np.linspace(0.02, 0.98, 20))
    worst_f = max(abs(cubic_agm.check_scaled_f1313_functional_equation(float(x)).margin)
                  for x in np.linspace(0.05, 0.95, 10))
    ok = worst_t <= 1e-11 and worst_f <= 1e-10
    return ok, (f"F(1/3,1/3;1) cubic transform {worst_t:.2e} <= 1e-11, "
                f"functional equation {worst_f:.2e} <= 1e-10")


def criterion_4():
    rs = np.linspace(0.02, 0.98, 20)
    tol = 1e-12
    depth = product_expansion.depth_for(tol)
    tail = math.log(9.0) / 2.0 * 3.0 ** -depth
    worst = max(abs(product_expansion.mu_star_product(float(r), tol)
                    - modular.mu_star(THIRD, float(r))) for r in rs)
    orbit = product_expansion.cubic_orbit(0.5, depth)
    ok = worst <= 1e-10 and orbit.tail_bound == pytest.approx(tail) and tail / 2 <= tol
    return ok, f"orbit sum vs mu* worst {worst:.2e} <= 1e-10 at depth {depth}"


def criterion_5():
    grid = verifier.SweepGrid()
    worst_prod, worst_third = 0.0, 0.0
    for a in grid.a_values:
        for r in grid.r_values:
            for rep in verifier.check_modular_identities(a, r):
                if rep.check_id == "modulus_complement_product":
                    worst_prod = max(worst_prod, abs(rep.margin))
                else:
                    worst_third = max(worst_third, abs(rep.margin))
    fixed = abs(modular.mu_star(THIRD, (math.sqrt(3.0) - 1.0) / 2.0) - math.pi)
    selfc = max(abs(modular.mu_star(a, 2.0 ** -THIRD) - math.pi / (2 * math.sin(math.pi * a)))
                for a in SIGNATURES)
    ok = worst_prod <= 1e-10 and worst_third <= 1e-10 and fixed <= 1e-10 and selfc <= 1e-11
    return ok, (f"complement product {worst_prod:.2e}, a=1/3 identities {worst_third:.2e}, "
                f"fixed point {fixed:.2e}, self-complementary {selfc:.2e}")


def criterion_6():
    reports = verifier.run_full_suite(verifier.SweepGrid())
    if any(rep.check_id == "suite_error" for rep in reports):
        return False, "suite raised"
    one_sided = [rep for rep in reports if rep.kind == ONE_SIDED
                 and rep.check_id.startswith(INEQUALITY_PREFIXES)]
    worst = min(rep.margin for rep in one_sided)
    tight = [rep for rep in reports if rep.kind == EQUALITY and rep.a is not None
             and abs(rep.a - THIRD) < 1e-12]
    tight += [rep for rep in reports if rep.kind == EQUALITY
              and rep.check_id.startswith("quotient_") and "0.333333" in rep.note]
    worst_tight = max(abs(rep.margin) for rep in tight)
    zb_third = [rep for r in verifier.DEFAULT_RADII
                for rep in verifier.check_zero_balanced_cubic_inequality(THIRD, 2 * THIRD, r)]
    worst_tight = max(worst_tight, max(abs(rep.margin) for rep in zb_third))
    ok = worst >= -1e-12 and worst_tight <= 1e-10 and all(rep.passed for rep in reports)
    return ok, (f"{len(one_sided)} inequality checks, worst margin {worst:.2e} >= -1e-12; "
                f"{len(tight) + len(zb_third)} equality cases at a=1/3 within "
                f"{worst_tight:.2e} <= 1e-10")


def criterion_7():
    rs = np.linspace(0.02, 0.98, 20)
    worst_inv = 0.0
    for a in SIGNATURES:
        for r in map(float, rs):
            worst_inv = max(worst_inv, abs(modular.mu_star_inverse(a, modular.mu_star(a, r)) - r))
    worst_d = 0.0
    for a in SIGNATURES:
        for r in (0.1, 0.3, 0.5, 0.7, 0.9):
            h = 1e-5 * r
            fd = (modular.mu_star(a, r + h) - modular.mu_star(a, r - h)) / (2 * h)
            d = modular.mu_star_derivative(a, r)
            worst_d = max(worst_d, abs(d - fd) / abs(fd))
    ok = worst_inv <= 1e-10 and worst_d <= 1e-6
    return ok, f"inverse round trip {worst_inv:.2e} <= 1e-10, derivative rel err {worst_d:.2e} <= 1e-6"


def criterion_8():
    cmd = [sys.executable, "-m", "cubic_modular", "verify"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    codes = (first.returncode, second.returncode)
    same = first.stdout == second.stdout and len(first.stdout) > 0
    return codes == (0, 0) and same, f"verify exit codes {codes}, byte-identical output {same}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8]


@pytest.mark.parametrize("n", range(1, 9))
def test_acceptance_criterion(n, capsys):
    t0 = time.perf_counter()
    ok, detail = CRITERIA[n - 1]()
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        _emit(n, ok and elapsed < TIME_BUDGET, f"{detail} ({elapsed:.2f}s)")
    assert ok, detail
    assert elapsed < TIME_BUDGET


def test_mpmath_spot_check():
    # independent oracle for the quantities criteria 4 and 5 compare against
    mpmath.mp.dps = 40
    r = 0.37
    ref = mpmath.pi / (2 * mpmath.sin(mpmath.pi / 3)) \
        * mpmath.hyp2f1(THIRD, 2 * THIRD, 1, 1 - mpmath.mpf(r) ** 3) \
        / mpmath.hyp2f1(THIRD, 2 * THIRD, 1, mpmath.mpf(r) ** 3)
    assert product_expansion.mu_star_product(r) == pytest.approx(float(ref), abs=1e-10)


if __name__ == "__main__":
    results = [_emit(n, *CRITERIA[n - 1]()) for n in range(1, 9)]
    sys.exit(0 if all(results) else 1)
