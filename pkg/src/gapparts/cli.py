"""Command-line interface.

Every command is deterministic given its flags (and seed), prints a single
machine-readable JSON report on stdout (except `enumerate` and `series`,
which stream listings), and uses the exit code to signal the outcome:

    0  all requested checks pass
    1  a property violation was found
    2  usage or precondition error

Partition counts and series coefficients are serialized as decimal strings
inside JSON so consumers never lose precision.  The report schema is
versioned with a "schema" field, currently 1.

The default horizon for -N flags can be set with GAPPARTS_HORIZON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from ._backend import backend_name
from .denumerants import CoinSystem, c_counts, denumerant_table, f_counts, ratio_check
from .errors import GappartsError
from .injections import phi, psi_for_index, verify_exhaustive, verify_sampled
from .partitions import GapParams, Partition, enumerate_c, enumerate_f
from .series import (
    positivity_scan,
    series_abc,
    series_c,
    series_d,
    series_e,
    series_f,
    series_h,
    series_h_direct,
    series_h_from_families,
)

SCHEMA = 1


def _default_horizon() -> int:
    return int(os.environ.get("GAPPARTS_HORIZON", "1000"))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(report: dict) -> None:
    print(_dump(report))


def _params(args) -> GapParams:
    k = args.k if args.k is not None else max(args.s + 1, args.L)
    return GapParams(L=args.L, s=args.s, k=k)


def _add_params(parser, k_required=False):
    parser.add_argument("-L", type=int, required=True, help="window width L >= 3")
    parser.add_argument("-s", type=int, required=True, help="smallest part s >= 1")
    parser.add_argument(
        "-k",
        type=int,
        default=None,
        required=k_required,
        help="forbidden part, max(s+1, L) <= k <= s+L (default max(s+1, L))",
    )


# ---------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    params = _params(args)
    source = enumerate_c if args.family == "C" else enumerate_f
    for p in source(params, args.n):
        if args.format == "text":
            print(p.to_text())
        else:
            print(_dump(p.to_json_obj()))
    return 0


def cmd_verify_inequality(args) -> int:
    params = _params(args)
    f = f_counts(params, args.n_max)
    c = c_counts(params, args.n_max)
    violations = [
        {"n": n, "f": str(f[n]), "c": str(c[n])}
        for n in range(args.n_min, args.n_max + 1)
        if f[n] < c[n]
    ]
    report = {
        "schema": SCHEMA,
        "command": "verify-inequality",
        "params": {"L": params.L, "s": params.s, "k": params.k},
        "n_min": args.n_min,
        "n_max": args.n_max,
        "violations": violations,
        "pass": not violations,
    }
    _emit(report)
    return 0 if report["pass"] else 1


def cmd_threshold_search(args) -> int:
    params = _params(args)
    horizon = args.N if args.N is not None else _default_horizon()
    f_dp = f_counts(params, horizon)
    c_dp = c_counts(params, horizon)
    f_gf = list(series_f(params, horizon).coeffs)
    c_gf = list(series_c(params, horizon).coeffs)
    routes_agree = f_dp == f_gf and c_dp == c_gf
    largest = None
    for n in range(1, horizon + 1):
        if f_dp[n] < c_dp[n]:
            largest = n
    report = {
        "schema": SCHEMA,
        "command": "threshold-search",
        "params": {"L": params.L, "s": params.s, "k": params.k},
        "horizon": horizon,
        "routes_agree": routes_agree,
        "largest_violation": largest,
    }
    _emit(report)
    return 0 if routes_agree else 1


def _replay_golden(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        cases = json.load(handle)
    results = []
    for case in cases:
        params = GapParams(**case["params"])
        alpha = Partition.from_text(case["input"])
        entry = {"name": case["name"], "pass": True}
        trace = phi(alpha, params)
        got = _dump(trace.to_json_obj())
        want = _dump(case["trace"])
        if got != want:
            entry.update({"pass": False, "got": got, "want": want})
        inverse = psi_for_index(trace.label.index)(trace.output, params)
        got_inv = _dump(inverse.to_json_obj())
        want_inv = _dump(case["inverse"])
        if got_inv != want_inv:
            entry.update({"pass": False, "got_inverse": got_inv, "want_inverse": want_inv})
        if inverse.output != alpha:
            entry["pass"] = False
        results.append(entry)
    return {
        "mode": "golden",
        "fixture": path,
        "cases": results,
        "pass": all(r["pass"] for r in results),
    }


def cmd_injection_verify(args) -> int:
    if args.golden:
        report = _replay_golden(args.golden)
    else:
        params = _params(args)
        if args.n_min is None or args.n_max is None:
            raise GappartsError("--n-min and --n-max are required without --golden")
        if args.mode == "exhaustive":
            report = verify_exhaustive(params, args.n_min, args.n_max)
        else:
            report = verify_sampled(
                params, range(args.n_min, args.n_max + 1), args.seed, args.count
            )
    report.update({"schema": SCHEMA, "command": "injection-verify"})
    _emit(report)
    return 0 if report["pass"] else 1


def cmd_positivity(args) -> int:
    horizon = args.N if args.N is not None else _default_horizon()
    direct = series_h_direct(args.L, args.s, args.r, args.k1, args.k2, horizon)
    assembled = series_h_from_families(args.L, args.s, args.r, args.k1, args.k2, horizon)
    scan_direct = positivity_scan(direct, args.start)
    scan_assembled = positivity_scan(assembled, args.start)
    agree = direct == assembled and scan_direct == scan_assembled
    report = {
        "schema": SCHEMA,
        "command": "positivity",
        "params": {"L": args.L, "s": args.s, "r": args.r, "k1": args.k1, "k2": args.k2},
        "horizon": horizon,
        "start": args.start,
        "last_nonpositive": scan_direct,
        "paths_agree": agree,
    }
    _emit(report)
    return 0 if agree else 1


def cmd_asymptotics(args) -> int:
    ns = [int(v) for v in args.n_list.split(",") if v.strip()]
    entries = []
    if args.coins:
        coins = CoinSystem(int(v) for v in args.coins.split(","))
        for n in ns:
            p_n = denumerant_table(coins, n)[n]
            entries.append({"n": n, "ratio": ratio_check(coins, n), "exact": str(p_n)})
        subject = {"coins": list(coins.denominations)}
    else:
        if args.L is None or args.s is None:
            raise GappartsError("need either --coins or both -s and -L")
        horizon = max(ns)
        a, _, _ = series_abc(args.s, args.L, horizon)
        norm = factorial(args.L - 1)
        for v in range(args.s, args.s + args.L + 1):
            norm *= v
        if args.dk:
            d = series_d(args.dk, args.s, args.L, horizon)
            for n in ns:
                entries.append(
                    {
                        "n": n,
                        "ratio": d[n] * norm / (args.dk * n ** (args.L - 1)),
                        "exact": str(d[n]),
                    }
                )
            subject = {"s": args.s, "L": args.L, "dk": args.dk}
        else:
            for n in ns:
                entries.append(
                    {"n": n, "ratio": a[n] * norm / n ** (args.L - 1), "exact": str(a[n])}
                )
            subject = {"s": args.s, "L": args.L}
    ok = True
    if args.tol is not None:
        ok = all(abs(e["ratio"] - 1.0) <= args.tol for e in entries)
    report = {
        "schema": SCHEMA,
        "command": "asymptotics",
        "subject": subject,
        "entries": entries,
        "tol": args.tol,
        "pass": ok,
    }
    _emit(report)
    return 0 if ok else 1


def cmd_series(args) -> int:
    horizon = args.N if args.N is not None else _default_horizon()
    kind = args.kind
    if kind in ("c", "f"):
        params = _params(args)
        series = series_c(params, horizon) if kind == "c" else series_f(params, horizon)
    elif kind in ("a", "b"):
        triple = series_abc(args.s, args.L, horizon)
        series = triple[0] if kind == "a" else triple[1]
    elif kind == "d":
        series = series_d(args.dk, args.s, args.L, horizon)
    elif kind == "e":
        series = series_e(args.dk, args.r, args.s, args.L, horizon)
    else:
        series = series_h(args.L, args.s, args.r, args.k1, args.k2, horizon)
    print("n,coefficient")
    for n, coeff in enumerate(series.coeffs):
        print("%d,%d" % (n, coeff))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapparts",
        description="Exact counting, enumeration and injection verification "
        "for partitions with a bounded gap between largest and smallest parts "
        "(kernel backend: %s)." % backend_name(),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream one partition family at a fixed weight")
    _add_params(p)
    p.add_argument("--family", choices=("C", "F"), required=True)
    p.add_argument("-n", type=int, required=True, help="weight to enumerate")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "verify-inequality",
        help="report every n in range where the F-family count drops below the C-family count",
    )
    _add_params(p)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_verify_inequality)

    p = sub.add_parser(
        "threshold-search",
        help="largest n up to the horizon violating the count inequality, "
        "cross-checked via series and DP routes",
    )
    _add_params(p)
    p.add_argument("-N", type=int, default=None, help="horizon (default $GAPPARTS_HORIZON or 1000)")
    p.set_defaults(func=cmd_threshold_search)

    p = sub.add_parser(
        "injection-verify",
        help="drive the injection property suite exhaustively, on samples, or from a golden fixture",
    )
    p.add_argument("-L", type=int)
    p.add_argument("-s", type=int)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000, help="samples per weight in sample mode")
    p.add_argument("--golden", default=None, help="replay a golden trace fixture file")
    p.set_defaults(func=cmd_injection_verify)

    p = sub.add_parser(
        "positivity",
        help="scan the signed series for its last nonpositive coefficient, "
        "built via both construction paths",
    )
    p.add_argument("-L", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("-N", type=int, default=None)
    p.add_argument("--start", type=int, default=0)
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser(
        "asymptotics",
        help="exact-count to growth-estimate ratios for coin systems or the a/d series",
    )
    p.add_argument("--coins", default=None, help="comma-separated denominations")
    p.add_argument("-s", type=int, default=None)
    p.add_argument("-L", type=int, default=None)
    p.add_argument("--dk", type=int, default=None, help="window width for the d-series ratio")
    p.add_argument("--n-list", required=True, help="comma-separated evaluation points")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("series", help="dump one series as CSV (n,coefficient)")
    p.add_argument("--kind", choices=("c", "f", "a", "b", "d", "e", "h"), required=True)
    p.add_argument("-L", type=int, default=None)
    p.add_argument("-s", type=int, default=None)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--dk", type=int, default=None)
    p.add_argument("-r", type=int, default=0)
    p.add_argument("--k1", type=int, default=None)
    p.add_argument("--k2", type=int, default=None)
    p.add_argument("-N", type=int, default=None)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GappartsError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
