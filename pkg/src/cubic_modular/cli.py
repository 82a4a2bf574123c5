"""Command-line front end.

All output is CSV with a header row. Numbers are printed with 17
significant digits so that identical invocations give identical bytes.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain
error, 3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import os
import sys
from dataclasses import dataclass

from . import cubic_agm, modular, product_expansion, verifier
from .errors import ConfigurationError, ConvergenceError, DomainError, ParameterError

COMMANDS = ("eval", "invert", "orbit", "product", "agm", "verify", "sweep")
EVAL_FUNCTIONS = ("mu-star", "mu", "mu-derivative", "phi-star", "complement", "phi3", "phi13")
DEFAULT_TOL = 1e-12
DEFAULT_GRID = "0.05:0.95:25"
TOL_ENV = "CUBIC_MODULAR_TOL"

SWEEP_COLUMNS = ("a", "r", "mu_star", "lower", "upper", "mu_star_third")
SWEEP_HELP = (
    "sweep columns: a, r, mu_star (mu*_a(r)), lower and upper (orbit-sum bounds "
    "on mu*_a(r)), mu_star_third (mu* at a = 1/3 from the orbit sum)")


@dataclass(frozen=True)
class CliConfig:
    command: str
    signature_a: float | None = None
    r: float | None = None
    K: float | None = None
    tol: float = DEFAULT_TOL
    grid_spec: str | None = None
    output_path: str | None = None
    function: str = "mu-star"
    y: float | None = None
    n: int = 5
    x: float | None = None
    case: str = "a"
    signatures: tuple | None = None


def fmt(v) -> str:
    return format(float(v), ".17g")


def _default_tol():
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ConfigurationError(f"{TOL_ENV} must be a decimal number, got {raw!r}") from None
    if not (math.isfinite(tol) and tol > 0):
        raise ConfigurationError(f"{TOL_ENV} must be positive, got {raw!r}")
    return tol


def _signature_list(text):
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad signature list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubic-modular",
        description="Modular functions of signature 1/a, the cubic AGM and the orbit-sum "
                    "bounds, with numerical verification of their identities.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(p, *, a=False, r=False, K=False):
        if a:
            p.add_argument("--a", type=float, dest="signature_a", help="signature a in (0, 1/2]")
        if r:
            p.add_argument("--r", type=float, help="radius r in (0, 1)")
        if K:
            p.add_argument("--K", type=float, help="degree K > 0")
        p.add_argument("--tol", type=float, default=None,
                       help=f"tolerance (default {DEFAULT_TOL:g}, or ${TOL_ENV})")
        p.add_argument("--output", dest="output_path", default=None,
                       help="write CSV to this file instead of standard output")

    p = sub.add_parser("eval", help="evaluate a modular function")
    common(p, a=True, r=True, K=True)
    group = p.add_mutually_exclusive_group()
    for name in EVAL_FUNCTIONS:
        group.add_argument(f"--{name}", dest="function", action="store_const", const=name,
                           help=f"evaluate {name}")
    p.set_defaults(function="mu-star")

    p = sub.add_parser("invert", help="solve mu*_a(r) = y for r")
    common(p, a=True)
    p.add_argument("--y", type=float, required=True, help="target value of mu*")

    p = sub.add_parser("orbit", help="orbit of r* under the degree-3 map")
    common(p, r=True)
    p.add_argument("--n", type=int, default=5, help="number of steps (default 5)")

    p = sub.add_parser("product", help="mu* at a = 1/3 from the orbit sum")
    common(p, a=True, r=True)

    p = sub.add_parser("agm", help="limit of the cubic AGM from (1, x) or (x, 1)")
    common(p)
    p.add_argument("--x", type=float, required=True, help="x in (0, 1)")
    p.add_argument("--case", choices=("a", "b"), default="a",
                   help="a: start at (1, x); b: start at (x, 1)")

    p = sub.add_parser("verify", help="run the verification suite, print CSV reports")
    common(p)
    p.add_argument("--grid", dest="grid_spec", default=None,
                   help=f"radii as start:stop:count (default {DEFAULT_GRID})")
    p.add_argument("--signatures", type=_signature_list, default=None,
                   help="comma-separated signatures (default 0.1,0.2,1/3,0.4,0.5)")

    p = sub.add_parser("sweep", help="CSV of mu*_a and its bounds over a radius grid",
                       epilog=SWEEP_HELP)
    common(p, a=True)
    p.add_argument("--grid", dest="grid_spec", default=None,
                   help=f"radii as start:stop:count (default {DEFAULT_GRID})")
    return parser


def _require(parser, ns, *names):
    for name in names:
        if getattr(ns, name, None) is None:
            flag = {"signature_a": "--a"}.get(name, f"--{name}")
            parser.error(f"{ns.command} requires {flag}")


def parse_args(argv) -> CliConfig:
    """Parse and validate ``argv``; usage and domain errors exit with code 2."""
    parser = build_parser()
    ns = parser.parse_args(list(argv))
    try:
        tol = ns.tol if ns.tol is not None else _default_tol()
    except ConfigurationError as exc:
        parser.error(str(exc))
    if not (math.isfinite(tol) and tol > 0):
        parser.error("--tol must be positive")
    cmd = ns.command
    a = getattr(ns, "signature_a", None)
    r = getattr(ns, "r", None)
    K = getattr(ns, "K", None)
    x = getattr(ns, "x", None)
    try:
        if a is not None:
            modular.check_signature(a)
        if r is not None and not 0.0 < r < 1.0:
            raise DomainError(f"r must lie in (0, 1), got {r!r}")
        if K is not None:
            modular.check_degree(K)
        if x is not None and not 0.0 < x < 1.0:
            raise DomainError(f"x must lie in (0, 1), got {x!r}")
        if cmd == "orbit" and ns.n < 0:
            raise DomainError("--n must be non-negative")
        grid_spec = getattr(ns, "grid_spec", None)
        if cmd in ("verify", "sweep"):
            verifier.SweepGrid.from_spec(grid_spec or DEFAULT_GRID)
        sigs = getattr(ns, "signatures", None)
        if sigs is not None:
            verifier.SweepGrid(sigs, (0.5,))
    except (DomainError, ConfigurationError) as exc:
        parser.error(str(exc))
    if cmd == "eval":
        _require(parser, ns, "r")
        if ns.function not in ("complement", "phi3", "phi13"):
            _require(parser, ns, "signature_a")
        if ns.function == "phi-star":
            _require(parser, ns, "K")
    elif cmd == "invert":
        _require(parser, ns, "signature_a")
    elif cmd in ("orbit", "product"):
        _require(parser, ns, "r")
    elif cmd == "sweep":
        _require(parser, ns, "signature_a")
    return CliConfig(cmd, a, r, K, tol, grid_spec, ns.output_path,
                     function=getattr(ns, "function", "mu-star"), y=getattr(ns, "y", None),
                     n=getattr(ns, "n", 5), x=x, case=getattr(ns, "case", "a"),
                     signatures=sigs)


# -- commands ------------------------------------------------------------------

def _eval_rows(cfg):
    a, r, K = cfg.signature_a, cfg.r, cfg.K
    f = cfg.function
    if f == "mu-star":
        v, err = modular.mu_star_with_error(a, r)
    elif f == "mu":
        v, err = modular.mu_a(a, r), float("nan")
    elif f == "mu-derivative":
        v, err = modular.mu_star_derivative(a, r), float("nan")
    elif f == "phi-star":
        v = modular.phi_star(K, a, r)
        err = 0.0 if K == 1 else modular.INVERSE_TOL / abs(modular.mu_star_derivative(a, v))
    elif f == "complement":
        v, err = modular.complement(r), math.ulp(1.0)
    elif f == "phi3":
        v, err = modular.phi3_star_closed(r), 4 * math.ulp(1.0)
    else:
        v, err = modular.phi13_star_closed(r), 4 * math.ulp(1.0)
    return [(f.replace("-", "_"), v, err)]


def _invert_rows(cfg):
    r = modular.mu_star_inverse(cfg.signature_a, cfg.y)
    slope = modular.mu_star_derivative(cfg.signature_a, r)
    return [("r", r, modular.INVERSE_TOL / abs(slope))]


def _orbit_rows(cfg):
    orb = product_expansion.cubic_orbit(cfg.r, cfg.n)
    rows = [("r_0", orb.r0, 0.0)]
    rows += [(f"r_{k}", v, 0.0) for k, v in enumerate(orb.terms, start=1)]
    rows.append(("partial_log_sum", orb.partial_log_sum, orb.tail_bound))
    return rows


def _product_rows(cfg):
    rows = [("mu_star_product", product_expansion.mu_star_product(cfg.r, cfg.tol), cfg.tol)]
    if cfg.signature_a is not None:
        lo, hi = product_expansion.mu_star_bounds(cfg.signature_a, cfg.r, cfg.tol)
        rows += [("lower", lo, cfg.tol), ("upper", hi, cfg.tol)]
    return rows


def _agm_rows(cfg):
    start = (1.0, cfg.x) if cfg.case == "a" else (cfg.x, 1.0)
    st = cubic_agm.agm_iterate(*start, tol=min(cfg.tol, 1e-15))
    return [("agm_limit", st.a_n, st.gap), ("steps", st.n, 0.0)]


def _write_rows(out, header, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt(v) for v in row])


def _grid(cfg, a_values=None):
    return verifier.SweepGrid.from_spec(cfg.grid_spec or DEFAULT_GRID,
                                        a_values=a_values or verifier.DEFAULT_SIGNATURES,
                                        tolerance=cfg.tol)


def _run(cfg, out):
    if cfg.command == "verify":
        reports = verifier.run_full_suite(_grid(cfg, cfg.signatures))
        verifier.write_csv(reports, out)
        return 0 if all(rep.passed for rep in reports) else 1
    if cfg.command == "sweep":
        a = cfg.signature_a
        rows = []
        for r in _grid(cfg).r_values:
            lo, hi = product_expansion.mu_star_bounds(a, r, cfg.tol)
            rows.append((a, r, modular.mu_star(a, r), lo, hi,
                         product_expansion.mu_star_product(r, cfg.tol)))
        _write_rows(out, SWEEP_COLUMNS, rows)
        return 0
    handler = {"eval": _eval_rows, "invert": _invert_rows, "orbit": _orbit_rows,
               "product": _product_rows, "agm": _agm_rows}[cfg.command]
    _write_rows(out, ("name", "value", "abs_error_estimate"), handler(cfg))
    return 0


def execute(cfg: CliConfig) -> int:
    """Run ``cfg``; returns the process exit code."""
    try:
        with contextlib.ExitStack() as stack:
            if cfg.output_path:
                out = stack.enter_context(open(cfg.output_path, "w", newline="",
                                               encoding="utf-8"))
            else:
                out = sys.stdout
            return _run(cfg, out)
    except ConvergenceError as exc:
        print(f"cubic-modular: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ParameterError, ConfigurationError) as exc:
        print(f"cubic-modular: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return execute(cfg)


if __name__ == "__main__":
    sys.exit(main())
