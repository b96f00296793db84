#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each hot kernel once per backend on a representative workload and
prints the timings side by side.  Usage:

    python benchmarks/bench_kernels.py
"""

import time

from gapparts import _kernels_py as pure

try:
    from gapparts import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def unrank_batch(mod, n, lo, hi, forbidden, draws):
    table = mod.bounded_count_table(n, lo, hi, forbidden)
    total = table.entry(n, hi)
    step = max(1, total // draws)
    out = 0
    for index in range(0, total, step):
        out += len(mod.unrank_with_table(table, n, lo, hi, forbidden, index))
    return out


CASES = [
    (
        "denumerant_table  coins={3,4,5,6,7}, N=100000",
        lambda mod: mod.denumerant_table((3, 4, 5, 6, 7), 100000),
    ),
    (
        "geometric_divide  N=100000, m=2",
        lambda mod: mod.geometric_divide([1] * 100001, 2),
    ),
    (
        "cauchy_product    len=1500 x len=1500",
        lambda mod: mod.cauchy_product(
            [(i * 2654435761) % 1000 - 500 for i in range(1500)],
            [(i * 40503) % 900 - 450 for i in range(1500)],
            1499,
        ),
    ),
    (
        "count_bounded     n=85, parts [1,11] minus 10",
        lambda mod: mod.count_bounded(85, 1, 11, 10),
    ),
    (
        "unrank batch      n=170, parts [3,39], ~20000 draws",
        lambda mod: unrank_batch(mod, 170, 3, 39, 0, 20000),
    ),
]


def main():
    if compiled is None:
        print("compiled kernels unavailable; showing pure-Python timings only")
    rows = []
    for label, runner in CASES:
        t_pure, expected = timed(runner, pure)
        if compiled is not None:
            t_comp, got = timed(runner, compiled)
            assert got == expected, "backends disagree on %s" % label
            rows.append((label, t_comp, t_pure, t_pure / t_comp))
        else:
            rows.append((label, None, t_pure, None))

    print()
    print("%-48s %10s %10s %9s" % ("kernel", "compiled", "pure", "speedup"))
    print("-" * 80)
    for label, t_comp, t_pure, speedup in rows:
        comp = "%.4fs" % t_comp if t_comp is not None else "-"
        ratio = "%.0fx" % speedup if speedup is not None else "-"
        print("%-48s %10s %9.4fs %9s" % (label, comp, t_pure, ratio))


if __name__ == "__main__":
    main()
