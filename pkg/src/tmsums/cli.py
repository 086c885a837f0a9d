"""Command-line surface: verification suites, frequency scans, descent
traces, progression-count tables, benchmarks, and convergent listings.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import verify
from .bounds import (best_rational_approximation, convergent_sequence,
                     farey_fractions, theorem_pipeline)
from .digits import LAMBDA_GELFOND, gelfond_class_counts
from .fasteval import fast_correlation_sum, fast_linear_sum, lemma2_reduction
from .oracles import (CorrelationSumSpec, naive_correlation_sum,
                      naive_linear_sum)

NAIVE_CAP = 10**8  # brute force refuses ranges above this

CSV_HEADER = ("alpha,a,q,theta,X,abs_S0,abs_S0_over_X,"
              "predicted_scale,ratio,window_pass")


@dataclass
class ScanConfig:
    """Inputs of one scan run; a fixed seed makes the output byte-stable."""

    X_list: list[int]
    alpha_source: str            # "farey", "uniform", or "explicit"
    farey_order: int = 0
    uniform_count: int = 0
    explicit: list[float] = field(default_factory=list)
    c: float = 1.0
    seed: int = 0
    output_path: str = "scan.csv"
    jobs: int = 0                # 0 = all available cores

    def __post_init__(self) -> None:
        if not self.X_list or any(x <= 2 for x in self.X_list):
            raise ValueError("X values must all exceed 2")
        if self.alpha_source == "farey" and self.farey_order < 1:
            raise ValueError("farey order must be >= 1")
        if self.alpha_source == "uniform" and self.uniform_count < 1:
            raise ValueError("uniform grid size must be >= 1")
        if self.alpha_source == "explicit" and not self.explicit:
            raise ValueError("explicit alpha list is empty")

    def alphas(self) -> list:
        if self.alpha_source == "farey":
            return farey_fractions(self.farey_order)
        if self.alpha_source == "uniform":
            rng = np.random.default_rng(self.seed)
            return [float(a) for a in rng.random(self.uniform_count)]
        return list(self.explicit)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _scan_row(args: tuple) -> tuple:
    num, den, X, c = args
    rep = theorem_pipeline(Fraction(num, den), X, c)
    ap = rep.approximation
    alpha = num / den
    return (X, alpha, ap.a, ap.q, ap.theta, rep.actual, rep.actual / X,
            rep.predicted_scale, rep.ratio, rep.q_window_pass)


def run_scan(config: ScanConfig) -> list[str]:
    """Compute all rows of the scan; returns the CSV lines (header first).

    Rows are computed by a worker pool but emitted sorted by (X, alpha),
    so the output does not depend on the parallelism degree.
    """
    tasks = []
    for alpha in config.alphas():
        fr = Fraction(alpha)
        for X in config.X_list:
            tasks.append((fr.numerator, fr.denominator, X, config.c))
    jobs = config.jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_row, tasks, chunksize=4))
    else:
        rows = [_scan_row(t) for t in tasks]
    rows.sort(key=lambda r: (r[0], r[1]))
    lines = [CSV_HEADER]
    for (X, alpha, a, q, theta, s0, s0_over_x, pred, ratio, win) in rows:
        lines.append(",".join([
            _fmt(alpha), str(a), str(q), _fmt(theta), str(X), _fmt(s0),
            _fmt(s0_over_x), _fmt(pred), _fmt(ratio), str(int(win)),
        ]))
    return lines


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_suite(args.level, echo=True)
    return 0 if all(r.passed for r in results) else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    settings: dict = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line or line.startswith("#") or "=" not in line:
                        continue
                    key, _, value = line.partition("=")
                    settings[key.strip()] = value.strip()
        except OSError as exc:
            print(f"cannot read config: {exc}", file=sys.stderr)
            return 2

    def pick(flag, key, cast, default=None):
        if flag is not None:
            return flag
        if key in settings:
            return cast(settings[key])
        return default

    x_list = pick(args.x, "x_list", lambda s: [int(v) for v in s.split()], None)
    farey = pick(args.farey, "farey", int, 0)
    uniform = pick(args.uniform, "uniform", int, 0)
    explicit = pick(args.alphas, "alphas", lambda s: [float(v) for v in s.split()], [])
    if x_list is None:
        print("scan needs --x (or x_list in the config file)", file=sys.stderr)
        return 2
    if farey:
        source = "farey"
    elif uniform:
        source = "uniform"
    elif explicit:
        source = "explicit"
    else:
        print("scan needs one of --farey/--uniform/--alphas", file=sys.stderr)
        return 2
    try:
        config = ScanConfig(
            X_list=x_list, alpha_source=source, farey_order=farey,
            uniform_count=uniform, explicit=explicit,
            c=pick(args.c, "c", float, 1.0),
            seed=pick(args.seed, "seed", int, 0),
            output_path=pick(args.out, "output_path", str, "scan.csv"),
            jobs=pick(args.jobs, "jobs", int, 0),
        )
    except ValueError as exc:
        print(f"bad scan configuration: {exc}", file=sys.stderr)
        return 2
    lines = run_scan(config)
    try:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {len(lines) - 1} rows to {config.output_path}")
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    if args.h < 2:
        print("trace needs a shift h >= 2", file=sys.stderr)
        return 2
    trace = lemma2_reduction(args.h, args.beta, args.x)
    print(trace.to_text())
    reconstructed = trace.reconstruct()
    print(f"reconstructed S(X,h,beta) = {reconstructed}")
    if args.x <= NAIVE_CAP:
        oracle = naive_correlation_sum(
            CorrelationSumSpec(Y=args.x, h=args.h, beta=args.beta))
        print(f"oracle                   = {oracle}")
        print(f"absolute error           = {abs(reconstructed - oracle):.3e}")
    else:
        print(f"oracle skipped (X > {NAIVE_CAP:.0e} cap)")
    return 0


def _cmd_gelfond(args: argparse.Namespace) -> int:
    if args.m < 1 or args.x < 1:
        print("gelfond needs X >= 1 and m >= 1", file=sys.stderr)
        return 2
    counts = gelfond_class_counts(args.x, args.m)
    main = args.x / (2 * args.m)
    scale = args.x**LAMBDA_GELFOND
    print("X,m,l,j,count,main_term,deviation,lambda_ratio")
    for j in (0, 1):
        for l in range(args.m):
            count = int(counts[j, l])
            dev = count - main
            print(",".join([
                str(args.x), str(args.m), str(l), str(j), str(count),
                _fmt(main), _fmt(dev), _fmt(abs(dev) / scale),
            ]))
    return 0


def _time_call(fn, *fn_args) -> tuple[float, complex]:
    start = time.perf_counter()
    value = fn(*fn_args)
    return time.perf_counter() - start, value


def _cmd_bench(args: argparse.Namespace) -> int:
    beta = 0.3721841231
    h = 37
    print(f"{'X':>16} {'naive_lin':>12} {'fast_lin':>12} {'naive_corr':>12} "
          f"{'fast_corr':>12} {'max_disc':>10}")
    for X in args.x:
        t_fl, v_fl = _time_call(fast_linear_sum, beta, X)
        t_fc, v_fc = _time_call(fast_correlation_sum, X, h, beta)
        if X <= NAIVE_CAP:
            t_nl, v_nl = _time_call(naive_linear_sum, beta, X)
            t_nc, v_nc = _time_call(
                naive_correlation_sum, CorrelationSumSpec(Y=X, h=h, beta=beta))
            disc = max(abs(v_fl - v_nl), abs(v_fc - v_nc))
            print(f"{X:>16} {t_nl:>11.4f}s {t_fl:>11.6f}s {t_nc:>11.4f}s "
                  f"{t_fc:>11.6f}s {disc:>10.2e}")
        else:
            print(f"{X:>16} {'skipped (cap)':>12} {t_fl:>11.6f}s "
                  f"{'skipped (cap)':>12} {t_fc:>11.6f}s {'-':>10}")
    return 0


def _cmd_approx(args: argparse.Namespace) -> int:
    try:
        seq = convergent_sequence(args.alpha, args.qmax)
    except ValueError as exc:
        print(f"bad frequency: {exc}", file=sys.stderr)
        return 2
    print("a,q,theta,abs_error")
    for r in seq:
        print(f"{r.a},{r.q},{_fmt(r.theta)},{_fmt(abs(args.alpha - r.a / r.q))}")
    best = best_rational_approximation(args.alpha, args.qmax)
    print(f"# best: {best.a}/{best.q}, theta = {_fmt(best.theta)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmsums",
        description=("Digit-parity twisted exponential sums: oracles, "
                     "log-time evaluators, and bound checks."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan", help="scan |S0(alpha)| over a frequency grid")
    p.add_argument("--x", type=int, nargs="+", help="cutoffs X (each > 2)")
    p.add_argument("--farey", type=int, help="use all Farey fractions of this order")
    p.add_argument("--uniform", type=int, help="use this many seeded uniform frequencies")
    p.add_argument("--alphas", type=float, nargs="+", help="explicit frequency list")
    p.add_argument("--c", type=float, help="log-power exponent (default 1)")
    p.add_argument("--seed", type=int, help="RNG seed for the uniform source")
    p.add_argument("--out", help="output CSV path (default scan.csv)")
    p.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    p.add_argument("--config", help="key=value file; flags override it")
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("trace", help="dump a digit-descent trace")
    p.add_argument("--h", type=int, required=True, help="shift (>= 2)")
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("gelfond", help="progression-count table for one modulus")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=_cmd_gelfond)

    p = sub.add_parser("bench", help="naive vs fast timings")
    p.add_argument("--x", type=int, nargs="+", required=True)
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("approx", help="continued-fraction convergents of alpha")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--qmax", type=int, default=10**6)
    p.set_defaults(fn=_cmd_approx)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
