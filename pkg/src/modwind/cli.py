"""Command-line entry point.

Machine-readable JSON goes to stdout; progress lines go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys

from . import bulk, invariants, necklace, stats, svgplot, verify
from .errors import BudgetError

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_RESOURCE = 4

# Beyond ~1e9 candidate words, exhaustive runs are not desk-scale.
WORK_CAP = 10**9

NORM_SIGMA = {
    stats.PERIOD: lambda A, tol: float(invariants.sigma_p2(A)),
    stats.MAXN: lambda A, tol: float(invariants.sigma_p2(A)),
    stats.WORD: lambda A, tol: float(invariants.sigma_w2(A)),
    stats.GEOM: lambda A, tol: invariants.chat_estimate(A, tol).sigma_g2,
}


def _progress(done, total):
    print(f"shard {done}/{total}", file=sys.stderr, flush=True)


def _default_threads():
    env = os.environ.get("MODWIND_THREADS")
    return int(env) if env else 1


def _even(value):
    n = int(value)
    if n % 2 != 0 or n < 2:
        raise argparse.ArgumentTypeError(f"N must be even and >= 2, got {n}")
    return n


def _bound(value):
    A = int(value)
    if A <= 1:
        raise argparse.ArgumentTypeError(f"A must exceed 1, got {A}")
    return A


def _workload(A, N):
    return sum(A**n for n in range(2, N + 1, 2))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="modwind",
        description="Winding statistics of low-lying closed geodesics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        p.add_argument("--A", type=_bound, required=True, help="partial quotient bound")
        if with_n:
            p.add_argument("--N", type=_even, required=True, help="maximum period length (even)")

    p = sub.add_parser("count", help="count necklaces up to period length N")
    common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="count by full enumeration")
    mode.add_argument("--closed-form", action="store_true",
                      help="count by Moebius sums (default)")
    p.add_argument("--threads", type=int, default=_default_threads())

    p = sub.add_parser("dist", help="empirical distribution vs Gaussian")
    common(p)
    p.add_argument("--norm", choices=stats.NORMALIZATIONS, required=True)
    p.add_argument("--bins", type=int, default=8192)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--tol", type=float, default=1e-3,
                   help="ergodic-constant tolerance for the geom normalization")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--svg", action="store_true", help="also emit dist.svg")
    p.add_argument("--sample", type=int, metavar="COUNT",
                   help="Monte Carlo mode: number of uniform draws")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("constants", help="variance constants and ergodic estimate")
    common(p, with_n=False)
    p.add_argument("--tol", type=float, default=1e-3)

    p = sub.add_parser("charfn", help="empirical characteristic function")
    common(p)
    p.add_argument("--norm", choices=[stats.PERIOD, stats.MAXN], default=stats.PERIOD)
    p.add_argument("--t", type=float, action="append", required=True,
                   help="evaluation point (repeatable)")
    p.add_argument("--threads", type=int, default=_default_threads())

    p = sub.add_parser("verify", help="run the brute-force oracle suite")
    common(p)
    return parser


def _emit(obj):
    print(stats.dumps17(obj))


def cmd_count(args):
    exact_requested = args.exact
    if exact_requested and _workload(args.A, args.N) > WORK_CAP:
        print("exact enumeration exceeds the work cap", file=sys.stderr)
        return EXIT_RESOURCE
    if exact_requested:
        acc = bulk.run(args.A, args.N, threads=args.threads, progress=_progress)
        exact = acc.total_count()
        assert exact == necklace.pi_exact(args.A, args.N)
    else:
        exact = necklace.pi_exact(args.A, args.N)
    report = necklace.pi_asymptotic(args.A, args.N)
    _emit({
        "A": args.A,
        "N": args.N,
        "exact": exact,
        "asymptotic": report.asymptotic,
        "relative_error": report.relative_error,
        "method": "enumeration" if exact_requested else "closed-form",
    })
    return EXIT_OK


def _sampled_accumulator(args, hist):
    acc = stats.JointCounts(args.A, args.N, hist)
    weights = [necklace.count_Pn(args.A, n) for n in range(2, args.N + 1, 2)]
    total = sum(weights)
    rng = random.Random(args.seed)
    for _ in range(args.sample):
        r = rng.randrange(total)
        for i, w in enumerate(weights):
            if r < w:
                n = 2 * (i + 1)
                break
            r -= w
        nk = necklace.sample_uniform_rng(args.A, n, rng)
        acc.accumulate(invariants.build_record(nk))
    return acc


def cmd_dist(args):
    hist = stats.default_hist(args.A, args.bins)
    if args.sample is not None:
        acc = _sampled_accumulator(args, hist)
    else:
        if _workload(args.A, args.N) > WORK_CAP:
            print("workload exceeds the exhaustive cap; use --sample", file=sys.stderr)
            return EXIT_RESOURCE
        acc = bulk.run(args.A, args.N, hist=hist, threads=args.threads,
                       progress=_progress)
    sigma2 = NORM_SIGMA[args.norm](args.A, args.tol)
    report = stats.ks_distance(acc, args.norm, sigma2)
    try:
        os.makedirs(args.out_dir, exist_ok=True)
        stats.write_table_csv(acc, os.path.join(args.out_dir, "table.csv"))
        stats.write_cdf_csv(report, os.path.join(args.out_dir, "cdf.csv"))
        with open(os.path.join(args.out_dir, "report.json"), "w") as fh:
            fh.write(stats.dumps17(stats.report_json(report, args.A, args.N)) + "\n")
        if args.svg:
            with open(os.path.join(args.out_dir, "dist.svg"), "w") as fh:
                fh.write(svgplot.render(report.cdf_points, sigma2))
    except OSError as exc:
        print(f"cannot write outputs: {exc}", file=sys.stderr)
        return EXIT_IO
    _emit(stats.report_json(report, args.A, args.N))
    return EXIT_OK


def cmd_constants(args):
    base = {
        "A": args.A,
        "sigma_p2": float(invariants.sigma_p2(args.A)),
        "sigma_w2": float(invariants.sigma_w2(args.A)),
    }
    try:
        est = invariants.chat_estimate(args.A, args.tol)
        code = EXIT_OK
    except BudgetError as exc:
        est = exc.best
        code = EXIT_RESOURCE
        print(str(exc), file=sys.stderr)
        if est is None:
            return code
    lo, hi = est.sigma_g2_interval
    base.update({
        "k": est.k,
        "c_k": est.c_k,
        "fibonacci_bound": est.error_bound,
        "sigma_g2": est.sigma_g2,
        "sigma_g2_interval": [lo, hi],
    })
    _emit(base)
    return code


def cmd_charfn(args):
    if _workload(args.A, args.N) > WORK_CAP:
        print("workload exceeds the exhaustive cap", file=sys.stderr)
        return EXIT_RESOURCE
    sigma2 = float(invariants.sigma_p2(args.A))
    acc = bulk.run(args.A, args.N, threads=args.threads, progress=_progress)
    t_admissible = math.sqrt(2.0 * math.log(args.A) * args.N) / math.sqrt(sigma2)
    rows = []
    for t in args.t:
        if args.norm == stats.MAXN and abs(t) >= t_admissible:
            print(f"warning: |t|={abs(t)} outside admissible range "
                  f"< {t_admissible:.4f}", file=sys.stderr)
        re, im = stats.empirical_char_fn(acc, args.norm, t)
        target = math.exp(-0.5 * sigma2 * t * t)
        rows.append({
            "t": t,
            "empirical_re": re,
            "empirical_im": im,
            "target": target,
            "gap": abs(re - target),
        })
    _emit({
        "A": args.A,
        "N": args.N,
        "normalization": args.norm,
        "sigma2": sigma2,
        "points": rows,
    })
    return EXIT_OK


def cmd_verify(args):
    results = verify.run_suite(args.A, args.N)
    failed = False
    for name, failures in results:
        status = "ok" if not failures else "FAIL"
        print(f"{name}: {status}", file=sys.stderr)
        for f in failures:
            failed = True
            print(f"  {f}", file=sys.stderr)
    _emit({
        "A": args.A,
        "N": args.N,
        "checks": [{"name": n, "passed": not f} for n, f in results],
        "passed": not failed,
    })
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "dist": cmd_dist,
    "constants": cmd_constants,
    "charfn": cmd_charfn,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BudgetError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
