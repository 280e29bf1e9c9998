"""Command-line front end.

    python -m pompeiu_ostrowski means --a 1 --b 2
    python -m pompeiu_ostrowski bound --eq 3.1 --fn reciprocal --a 1 --b 2 --x 1.5
    python -m pompeiu_ostrowski quad --fn log --a 1 --b 2 --eps 0.05
    python -m pompeiu_ostrowski sharpness --a 1 --b 2 --grid 101
    python -m pompeiu_ostrowski pompeiu --fn reciprocal --x1 1 --x2 2
    python -m pompeiu_ostrowski verify --seed 7

Exit status: 0 when every evaluated inequality holds, 2 when one fails,
1 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__, bounds, funcmodel as fm, means, pompeiu, quadrature, verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
SIG_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.{SIG_DIGITS}g}"
    return str(value)


def _jsonable(value):
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, float):
        return float(fmt(value))
    return value


def emit(rows: list[dict], fmt_name: str, config: dict, out) -> None:
    if fmt_name == "json":
        doc = {
            "metadata": {"version": __version__, "config": config},
            "rows": [{k: _jsonable(v) for k, v in r.items()} for r in rows],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if not rows:
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for r in rows:
        writer.writerow(fmt(v) for v in r.values())
    out.write(buf.getvalue())


def _interval(args) -> fm.Interval:
    try:
        return fm.Interval(args.a, args.b)
    except fm.DomainError as exc:
        raise UsageError(str(exc)) from None


def _model(spec: str) -> fm.FunctionModel:
    try:
        return fm.parse_function(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _x_values(spec: Optional[str], iv: fm.Interval) -> list[float]:
    if spec is None:
        return [iv.midpoint]
    if spec.startswith("grid:"):
        try:
            n = int(spec[5:])
        except ValueError:
            raise UsageError(f"bad grid spec {spec!r}") from None
        return [float(x) for x in bounds.x_grid(iv, n)]
    try:
        return [float(spec)]
    except ValueError:
        raise UsageError(f"--x must be a number or grid:N, got {spec!r}") from None


def _scaled(r: bounds.BoundReport, scale: float) -> bounds.BoundReport:
    if scale == 1.0:
        return r
    return bounds.BoundReport.make(r.equation_id, r.a, r.b, r.x, r.lhs, r.rhs * scale,
                                   r.rigorous, **r.metadata)


def cmd_means(args) -> tuple[list[dict], bool]:
    if not (args.a > 0 and args.b > 0):
        raise UsageError("means need 0 < a and 0 < b")
    pair = means.PositivePair(args.a, args.b)
    row = {"a": pair.a, "b": pair.b}
    row.update({k: v for k, v in means.means_table(pair).items()})
    if args.p is not None:
        row["Lp"] = means.p_logarithmic_mean(pair, args.p)
    ok = pair.degenerate or means.chain_holds(pair)
    row["chain_ok"] = ok
    return [row], ok


def _bound_reports(args) -> list[bounds.BoundReport]:
    eq = args.eq
    iv = _interval(args)
    if eq in ("6.2", "6.3", "6.4"):
        if not iv.positive:
            raise UsageError("means corollaries need 0 < a < b")
        if eq == "6.2":
            if args.p is None:
                raise UsageError("--p is required for --eq 6.2")
            return [bounds.mean_inequality_62(iv, args.p)]
        return [bounds.mean_inequality_63(iv) if eq == "6.3" else bounds.mean_inequality_64(iv)]

    model = _model(args.fn)
    if eq == "3.6":
        return [bounds.midpoint_bound(model, iv)]
    if eq == "4.4":
        return [bounds.weighted_midpoint_bound(model, iv, bounds.parse_weight(args.weight or "1"))]
    xs = _x_values(args.x, iv)
    if eq == "3.1":
        return bounds.pompeiu_ostrowski_sweep(model, iv, xs)
    if eq == "1.1":
        if args.M is None:
            raise UsageError("--M (a bound on |f'|) is required for --eq 1.1")
        return [bounds.ostrowski_classic(model, iv, x, args.M) for x in xs]
    if eq == "4.1":
        w = bounds.parse_weight(args.weight or "1")
        w.check_nonnegative(iv)
        return [bounds.weighted_bound(model, iv, w, x) for x in xs]
    raise UsageError(f"unsupported equation {eq!r}")


def cmd_bound(args) -> tuple[list[dict], bool]:
    reports = [_scaled(r, args.rhs_scale) for r in _bound_reports(args)]
    return [r.as_dict() for r in reports], all(r.holds() for r in reports)


def cmd_quad(args) -> tuple[list[dict], bool]:
    iv = _interval(args)
    if not iv.positive:
        raise UsageError("quadrature needs 0 < a < b")
    model = _model(args.fn)
    if args.nodes:
        part = quadrature.Partition.from_nodes([float(s) for s in args.nodes.split(",")], args.xi)
    else:
        if args.n is not None:
            n = args.n
        elif args.eps is not None:
            n = quadrature.n_for_tolerance(model, iv, args.eps)
        else:
            raise UsageError("give one of --n, --eps or --nodes")
        part = quadrature.uniform_partition(iv, n, args.xi)
    res = quadrature.evaluate(model, part, args.rule)
    row = res.as_dict()
    row["tier1"] *= args.rhs_scale
    ok = res.actual_error <= row["tier1"] + verify.QUAD_ATOL
    return [row], ok


def cmd_sharpness(args) -> tuple[list[dict], bool]:
    iv = _interval(args)
    xs, ks = verify.sharpness_scan(iv, args.grid, args.beta, args.alpha)
    k_max = float(ks.max())
    argmax = [float(x) for x, k in zip(xs, ks) if k >= k_max - verify.SHARPNESS_TOL]
    row = {
        "a": iv.a,
        "b": iv.b,
        "grid": args.grid,
        "max_k": k_max,
        "argmax_x": " ".join(fmt(x) for x in argmax),
    }
    # every k(x) <= 1/4 is the same statement as the bound holding on the grid
    return [row], k_max <= 0.25 * args.rhs_scale + verify.SHARPNESS_TOL


def cmd_pompeiu(args) -> tuple[list[dict], bool]:
    model = _model(args.fn)
    lo, hi = sorted((args.x1, args.x2))
    if lo == hi:
        raise UsageError("x1 and x2 must differ")
    try:
        pt = pompeiu.find_pompeiu_point(model, lo, hi, args.tol)
    except fm.DomainError as exc:
        raise UsageError(str(exc)) from None
    except pompeiu.NoRootLocated as exc:
        print(str(exc), file=sys.stderr)
        return [], False
    sec, tan = pompeiu.y_intercepts(model, lo, hi, pt.xi)
    row = {
        "x1": lo,
        "x2": hi,
        "xi": pt.xi,
        "quotient": pt.quotient,
        "residual": pt.residual,
        "secant_y0": sec,
        "tangent_y0": tan,
    }
    return [row], abs(sec - tan) <= args.tol and lo < pt.xi < hi


def cmd_verify(args) -> tuple[list[dict], bool]:
    only = args.only.split(",") if args.only else None
    results = verify.run_all(args.seed, args.rhs_scale, only)
    return [r.as_dict() for r in results], all(r.ok for r in results)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pompeiu-ostrowski", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, interval=True):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        # scales every right-hand side; only for exercising the failure path
        p.add_argument("--rhs-scale", type=float, default=1.0, help=argparse.SUPPRESS)
        if interval:
            p.add_argument("--a", type=float, required=True)
            p.add_argument("--b", type=float, required=True)

    p = sub.add_parser("means", help="special means of a and b")
    common(p)
    p.add_argument("--p", type=float)
    p.set_defaults(func=cmd_means)

    p = sub.add_parser("bound", help="evaluate one inequality")
    common(p)
    p.add_argument("--eq", required=True,
                   choices=("1.1", "3.1", "3.6", "4.1", "4.4", "6.2", "6.3", "6.4"))
    p.add_argument("--fn", default="reciprocal")
    p.add_argument("--x", help="point in [a, b] or grid:N (default: midpoint)")
    p.add_argument("--weight", help="1, t, t2, const:c, power:k or bump:c,h")
    p.add_argument("--M", type=float, help="bound on |f'| for --eq 1.1")
    p.add_argument("--p", type=float)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("quad", help="quadrature with remainder certificate")
    common(p)
    p.add_argument("--fn", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--nodes", help="explicit comma-separated nodes (overrides --a/--b grid)")
    p.add_argument("--xi", choices=quadrature.RULES, default="midpoint",
                   help="intermediate point in each cell")
    p.add_argument("--rule", choices=("general", "midpoint"), default="general")
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("sharpness", help="probe the constant 1/4 on affine functions")
    common(p)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--beta", type=float, default=3.0)
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("pompeiu", help="find a Pompeiu mean-value point")
    common(p, interval=False)
    p.add_argument("--fn", required=True)
    p.add_argument("--x1", type=float, required=True)
    p.add_argument("--x2", type=float, required=True)
    p.add_argument("--tol", type=float, default=pompeiu.DEFAULT_TOL)
    p.set_defaults(func=cmd_pompeiu)

    p = sub.add_parser("verify", help="run the full randomised verification sweep")
    common(p, interval=False)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--only", help="comma-separated check names")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {k: v for k, v in vars(args).items() if k not in ("func", "rhs_scale")}
    try:
        rows, ok = args.func(args)
    except (UsageError, fm.DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(rows, args.format, config, out)
    return EXIT_OK if ok else EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
