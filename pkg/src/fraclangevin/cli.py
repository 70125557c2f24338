"""Command-line front end.

    fraclangevin check  CONFIG   -- condition constants and solvability flags
    fraclangevin solve  CONFIG   -- run the fixed-point solver, write CSVs
    fraclangevin verify          -- run the built-in oracle checks

Exit codes: 0 success, 1 input error, 2 requested condition fails,
3 solver did not converge.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import check_conditions, spot_check_lipschitz
from .config import (
    build_problem,
    growth_spec,
    lipschitz_spec,
    load_config,
    resolve_config_path,
)
from .errors import ConfigError, DivergenceError, FracLangevinError
from .kernels import OrderParams
from .quadrature import Grid
from .solver import picard_solve

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONDITION = 2
EXIT_NO_CONVERGENCE = 3


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _load(args):
    path = resolve_config_path(args.config)
    cfg = load_config(path)
    if args.n_panels is not None:
        cfg.n_panels = args.n_panels
    if args.tol is not None:
        cfg.tol = args.tol
    if args.max_iter is not None:
        cfg.max_iter = args.max_iter
    return cfg


def cmd_check(args) -> int:
    cfg = _load(args)
    orders = OrderParams(cfg.alpha, cfg.beta, cfg.gamma)
    growth = growth_spec(cfg)
    lip = lipschitz_spec(cfg)
    report = check_conditions(orders, growth, lip)
    for name in ("K1", "K2", "K", "L1", "L2", "L", "psi1", "psi2", "psi",
                 "radius", "existence_ok", "uniqueness_ok"):
        value = getattr(report, name)
        if value is None and name.startswith("psi"):
            continue
        print("%s = %s" % (name, _fmt(value)))
    if lip is not None and cfg.f is not None:
        ok, worst = spot_check_lipschitz(build_problem(cfg).f, lip, rng=0)
        print("lipschitz_spot_check = %s (worst quotient %.6g)"
              % ("pass" if ok else "fail", worst))

    requested = []
    if args.require in ("existence", "both"):
        requested.append(report.existence_ok)
    if args.require in ("uniqueness", "both"):
        requested.append(report.uniqueness_ok)
    if args.require == "auto":
        requested = [flag for flag in (report.existence_ok, report.uniqueness_ok)
                     if flag is not None]
    if any(flag is None for flag in requested):
        print("error: requested condition needs data the config does not provide",
              file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if all(requested) else EXIT_CONDITION


def cmd_solve(args) -> int:
    cfg = _load(args)
    problem = build_problem(cfg)
    grid = Grid(cfg.n_panels)
    try:
        z, report = picard_solve(problem, grid, tol=cfg.tol, max_iter=cfg.max_iter)
    except DivergenceError as exc:
        print("error: iteration diverged: %s" % exc, file=sys.stderr)
        return EXIT_NO_CONVERGENCE

    with open(cfg.solution_csv, "w", newline="") as out:
        out.write("t,x,dx\n")
        for t, x, dx in zip(grid.nodes, z.x, z.dx):
            out.write("%.17g,%.17g,%.17g\n" % (t, x, dx))
    with open(cfg.convergence_csv, "w", newline="") as out:
        out.write("iteration,update_norm,contraction_factor\n")
        for k, upd in enumerate(report.update_norms, start=1):
            factor = "%.17g" % report.contraction_factors[k - 2] if k >= 2 else ""
            out.write("%d,%.17g,%s\n" % (k, upd, factor))
    with open(cfg.report_txt, "w", newline="") as out:
        out.write("converged = %s\n" % _fmt(report.converged))
        out.write("iterations = %d\n" % report.iterations)
        out.write("final_update = %.17g\n" % report.final_update)
        out.write("residual = %.17g\n" % report.residual)
        out.write("n_panels = %d\n" % cfg.n_panels)
        out.write("tol = %.17g\n" % cfg.tol)

    print("converged = %s" % _fmt(report.converged))
    print("iterations = %d" % report.iterations)
    print("residual = %.17g" % report.residual)
    print("wrote %s, %s, %s" % (cfg.solution_csv, cfg.convergence_csv, cfg.report_txt))
    return EXIT_OK if report.converged else EXIT_NO_CONVERGENCE


def cmd_verify(args) -> int:
    from .oracle import standard_checks

    results = standard_checks()
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print("%s  %-*s  %s" % (status, width, r.name, r.detail))
        failures += 0 if r.passed else 1
    print("%d/%d checks passed" % (len(results) - failures, len(results)))
    return EXIT_OK if failures == 0 else EXIT_CONDITION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fraclangevin",
        description="Solver and condition analysis for the clamped "
                    "coupled-order fractional Langevin boundary value problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("config", help="run configuration (key = value lines); "
                                      "bundled names like example1.cfg also resolve")
        p.add_argument("--n-panels", type=int, default=None, dest="n_panels")
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--max-iter", type=int, default=None, dest="max_iter")

    p_check = sub.add_parser("check", help="evaluate solvability conditions")
    add_common(p_check)
    p_check.add_argument("--require", choices=("existence", "uniqueness", "both", "auto"),
                         default="auto",
                         help="which condition gates the exit code (default: all "
                              "conditions the config provides data for)")
    p_check.set_defaults(func=cmd_check)

    p_solve = sub.add_parser("solve", help="run the fixed-point solver")
    add_common(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="run the oracle self-checks")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        loc = exc.location()
        prefix = "config%s" % ((":" + loc) if loc else "")
        print("error: %s: %s" % (prefix, exc), file=sys.stderr)
        return EXIT_INPUT
    except (FracLangevinError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
