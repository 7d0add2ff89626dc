"""Command-line harness: expected values, simulations, monotonicity sweeps, Poissonization.

Reports go to stdout (or --out) in CSV or JSON with a fixed schema; human
summaries go to stderr so the data stream stays parseable.  Exit codes:
0 success, 1 numeric or simulation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .angles import MCConfig
from .errors import PolyprojError
from .expected import (
    GAUSSIAN_MODELS,
    expected_f_model,
    expected_f_projection,
    monotonicity_table,
    poissonized_expected,
    t_functional_expected,
)
from .families import Family
from .hull import MODELS, SimConfig, simulate_expected_f
from .report import ReportRow, render


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {v}")
    return v


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=_positive_int, default=1_000_000,
                   help="Monte Carlo samples per angle estimate (default 1e6)")
    p.add_argument("--seed", type=_nonneg_int, default=0, help="master seed (default 0)")
    p.add_argument("--workers", type=_positive_int,
                   default=int(os.environ.get("POLYPROJ_WORKERS", "1")),
                   help="parallel workers (default $POLYPROJ_WORKERS or 1)")
    p.add_argument("--angle-cache", default=None, metavar="PATH",
                   help="append-only angle cache file shared across runs")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="write the report to this file instead of stdout")
    p.add_argument("--timings", action="store_true",
                   help="fill the wall_time_s column (off by default so reports are reproducible byte for byte)")


def _add_target(p: argparse.ArgumentParser, models: tuple[str, ...]) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--family", choices=tuple(f.value for f in Family))
    grp.add_argument("--model", choices=models)


def _add_k(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--k", type=_nonneg_int)
    grp.add_argument("--all-k", action="store_true", help="every proper face dimension")


def _mc_config(args) -> MCConfig:
    return MCConfig(samples=args.samples, seed=args.seed, workers=args.workers,
                    cache_path=args.angle_cache)


def _emit(rows: list[ReportRow], args) -> None:
    text = render(rows, args.format)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _proper_face_top(args) -> int:
    if args.family is not None:
        return min(args.n, args.d)
    if args.model == "gaussian":
        return min(args.n - 1, args.d)
    return min(args.n, args.d)


def _cmd_expected(args) -> int:
    cfg = _mc_config(args)
    ks = list(range(_proper_face_top(args))) if args.all_k else [args.k]
    rows = []
    for k in ks:
        t0 = time.perf_counter()
        if args.family is not None:
            est = expected_f_projection(Family(args.family), args.n, args.d, k, cfg)
        else:
            est = expected_f_model(args.model, args.n, args.d, k, cfg)
        wall = time.perf_counter() - t0 if args.timings else None
        rows.append(ReportRow(
            command="expected", model=args.model or "", family=args.family or "",
            n=args.n, d=args.d, k=k, value=float(est.value),
            stderr=float(est.std_error), method=est.method, wall_time_s=wall,
        ))
    _emit(rows, args)
    return 0


def _formula_estimate(model: str, n: int, d: int, k: int, cfg: MCConfig):
    if model in GAUSSIAN_MODELS:
        return expected_f_model(model, n, d, k, cfg)
    target = {
        "projected_simplex": (Family.SIMPLEX, n - 1),
        "projected_crosspolytope": (Family.CROSSPOLYTOPE, n),
        "projected_cube": (Family.CUBE, n),
    }[model]
    return expected_f_projection(target[0], target[1], d, k, cfg)


def _cmd_simulate(args) -> int:
    cfg = _mc_config(args)
    sim_cfg = SimConfig(model=args.model, n=args.n, d=args.d,
                        replications=args.reps, seed=args.seed, workers=args.workers)
    t0 = time.perf_counter()
    result = simulate_expected_f(sim_cfg, dump_path=args.dump)
    wall_total = time.perf_counter() - t0
    rows = []
    for k in range(args.d):
        sim = result.means[k]
        formula = _formula_estimate(args.model, args.n, args.d, k, cfg)
        diff = sim.value - formula.value
        denom = (sim.std_error**2 + formula.std_error**2) ** 0.5
        if denom > 0:
            z = diff / denom
        else:
            z = 0.0 if diff == 0 else float("inf")
        rows.append(ReportRow(
            command="simulate", model=args.model, n=args.n, d=args.d, k=k,
            value=sim.value, stderr=sim.std_error, method="monte_carlo",
            formula_value=float(formula.value), z_score=z,
            wall_time_s=wall_total if args.timings else None,
        ))
    _emit(rows, args)
    print(f"simulate {args.model} n={args.n} d={args.d}: {result.replications} replications, "
          f"{result.degenerate_events} degenerate resamples", file=sys.stderr)
    return 0


def _cmd_monotonicity(args) -> int:
    cfg = _mc_config(args)
    target = args.family or args.model
    ks = list(range(args.d)) if args.all_k else [args.k]
    rows = []
    summaries = []
    for k in ks:
        table = monotonicity_table(target, args.d, k, args.n_min, args.n_max, cfg)
        for row in table:
            rows.append(ReportRow(
                command="monotonicity", model=args.model or "", family=args.family or "",
                n=row.n, d=args.d, k=k, value=row.value, stderr=row.std_error,
                method="exact" if row.exact else "monte_carlo",
                strict_increase=row.strict_increase,
            ))
        steps = [r.strict_increase for r in table if r.strict_increase is not None]
        summaries.append(
            f"monotonicity {target} d={args.d} k={k}: "
            f"{sum(steps)}/{len(steps)} steps strictly increasing"
        )
    _emit(rows, args)
    for line in summaries:
        print(line, file=sys.stderr)
    return 0


def _cmd_poisson(args) -> int:
    cfg = _mc_config(args)
    ks = list(range(args.d)) if args.all_k else [args.k]
    grid = []
    t = args.t_min
    while t <= args.t_max + 1e-9:
        grid.append(round(t, 12))
        t += args.t_step
    rows = []
    for k in ks:
        values = []
        for t in grid:
            t0 = time.perf_counter()
            est = poissonized_expected(t, args.d, k, model=args.model, eps=args.eps, cfg=cfg)
            wall = time.perf_counter() - t0 if args.timings else None
            tf = None
            if args.b is not None:
                tf = t_functional_expected(args.d, k, args.b, est.value)
            rows.append(ReportRow(
                command="poisson", model=args.model, d=args.d, k=k, t=float(t),
                value=est.value, stderr=est.std_error,
                method="exact" if est.std_error == 0 else "monte_carlo",
                t_functional=tf, wall_time_s=wall,
            ))
            values.append(est.value)
        drops = sum(1 for a, b in zip(values, values[1:]) if b < a - 2 * args.eps)
        summary = "non-decreasing" if drops == 0 else f"{drops} decreasing steps"
        print(f"poisson {args.model} d={args.d} k={k}: {summary} over t grid", file=sys.stderr)
    _emit(rows, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyproj",
        description="Expected f-vectors of random projections of regular polytopes "
                    "and Gaussian random polytopes",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("expected", help="formula-side expected face counts")
    _add_target(p, GAUSSIAN_MODELS)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    _add_k(p)
    _add_common(p)
    p.set_defaults(func=_cmd_expected)

    p = sub.add_parser("simulate", help="sample hulls and compare with the formula route")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--reps", type=_positive_int, default=10_000)
    p.add_argument("--dump", default=None, metavar="PATH",
                   help="write every sampled f-vector to this CSV file")
    _add_common(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("monotonicity", help="expected f_k over a range of n with strictness verdicts")
    _add_target(p, GAUSSIAN_MODELS)
    p.add_argument("--d", type=_positive_int, required=True)
    _add_k(p)
    p.add_argument("--n-min", type=_positive_int, required=True)
    p.add_argument("--n-max", type=_positive_int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_monotonicity)

    p = sub.add_parser("poisson", help="Poissonized expectations over a grid of intensities")
    p.add_argument("--model", choices=GAUSSIAN_MODELS, required=True)
    p.add_argument("--d", type=_positive_int, required=True)
    _add_k(p)
    p.add_argument("--t-min", type=_positive_float, default=1.0)
    p.add_argument("--t-max", type=_positive_float, default=30.0)
    p.add_argument("--t-step", type=_positive_float, default=1.0)
    p.add_argument("--eps", type=_positive_float, default=1e-8,
                   help="truncation tolerance for the Poisson tail (default 1e-8)")
    p.add_argument("--b", type=float, default=None,
                   help="also report the size-functional scaling of order b")
    _add_common(p)
    p.set_defaults(func=_cmd_poisson)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "n_min") and args.n_max < args.n_min:
        parser.error(f"--n-max must be >= --n-min, got {args.n_max} < {args.n_min}")
    try:
        return args.func(args)
    except PolyprojError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
