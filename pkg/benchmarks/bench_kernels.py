"""Compare the compiled and pure-Python series kernels.

Times the raw kernels on representative workloads, then a full mu* sweep
with each backend forced through the environment switch in a subprocess.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import timeit

from cubic_modular._backend import available_backends

KERNEL_CASES = {
    "gauss x=0.74 (direct series)": ("gauss_series", (1 / 3, 2 / 3, 1.0, 0.74, 1e-15, 10_000)),
    "gauss x=0.2": ("gauss_series", (0.25, 0.75, 1.0, 0.2, 1e-15, 10_000)),
    "log sum xc=0.25": ("log_series", (0.25, 0.75, 0, 0.25, -1.3862943611198906, 1.0,
                                       -4.2274535, -1.0858609, -0.5772157, -0.5772157,
                                       1e-15, 10_000)),
    "kummer x=0.9": ("kummer_series", (0.1, 1.0, 0.9, 1e-15, 10_000)),
    "bessel z=-0.2": ("bessel_series", (2.0, -0.2, 1e-15, 10_000)),
}

SWEEP = ("from cubic_modular import mu_star, BACKEND\n"
         "import time\n"
         "t = time.perf_counter()\n"
         "for a in (0.1, 0.2, 1/3, 0.4, 0.5):\n"
         "    for i in range(1, 200):\n"
         "        mu_star(a, i / 200)\n"
         "print(BACKEND, time.perf_counter() - t)\n")


def bench_kernels(repeat):
    backends = available_backends()
    names = list(backends)
    print(f"{'kernel':32s}" + "".join(f"{n:>14s}" for n in names) + "   speedup")
    for label, (fn, args) in KERNEL_CASES.items():
        times = {}
        for name, mod in backends.items():
            f = getattr(mod, fn)
            number = 200
            best = min(timeit.repeat(lambda: f(*args), number=number, repeat=repeat))
            times[name] = best / number
        row = "".join(f"{times[n] * 1e6:12.2f}us" for n in names)
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:32s}{row}   {speed:6.1f}x")


def bench_sweep():
    print("\nmu* sweep over 5 signatures x 199 radii")
    for flag in ("1", "0"):
        env = dict(os.environ, CUBIC_MODULAR_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True,
                             text=True, check=True).stdout.split()
        print(f"  backend={out[0]:7s} {float(out[1]):.3f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if "cython" not in available_backends():
        print("compiled kernels are not built; only the pure-Python backend is timed")
    bench_kernels(args.repeat)
    bench_sweep()


if __name__ == "__main__":
    main()
