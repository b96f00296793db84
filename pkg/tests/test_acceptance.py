"""Acceptance suite.

One test per acceptance criterion, each printing a PASS line with its key
numbers (visible with `pytest -s` or `-rP`).  Scopes and tolerances are
pinned here and nowhere else.
"""

import json
import os
import time

from gapparts import (
    CoinSystem,
    GapParams,
    Partition,
    c_counts,
    count_table_c,
    count_table_f,
    enumeration_count_c,
    enumeration_count_f,
    f_counts,
    phi,
    positivity_scan,
    psi_for_index,
    ratio_check,
    series_abc,
    series_c,
    series_d,
    series_f,
    series_h_direct,
    series_h_from_families,
    verify_exhaustive,
    verify_sampled,
)

FIXTURE = os.path.join(os.path.dirname(__file__), "fixtures", "golden_traces.json")


def _pass(num, message):
    print("[criterion %d] PASS - %s" % (num, message))


def test_criterion_1_triple_oracle_grid():
    started = time.perf_counter()
    checked = 0
    for s in (1, 2, 3):
        for L in range(3, 11):
            params_any_k = GapParams(L=L, s=s, k=max(s + 1, L))
            c_dp = c_counts(params_any_k, 120)
            c_gf = series_c(params_any_k, 120).coeffs
            for n in range(121):
                assert c_dp[n] == c_gf[n] == enumeration_count_c(params_any_k, n), (
                    "C mismatch at s=%d L=%d n=%d" % (s, L, n)
                )
                checked += 1
            for k in range(max(s + 1, L), s + L + 1):
                params = GapParams(L=L, s=s, k=k)
                f_dp = f_counts(params, 120)
                f_gf = series_f(params, 120).coeffs
                for n in range(121):
                    assert f_dp[n] == f_gf[n] == enumeration_count_f(params, n), (
                        "F mismatch at s=%d L=%d k=%d n=%d" % (s, L, k, n)
                    )
                    checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 300, "grid took %.1fs, budget is a few minutes" % elapsed
    _pass(1, "triple-oracle equality at %d grid points in %.1fs" % (checked, elapsed))


def test_criterion_2_proven_inequality_cases():
    for L in range(3, 11):
        params = GapParams(L=L, s=1, k=L)
        f = f_counts(params, 500)
        c = c_counts(params, 500)
        bad = [n for n in range(1, 501) if f[n] < c[n]]
        assert not bad, "s=1 L=%d violations at %s" % (L, bad[:5])
    for L in range(3, 9):
        params = GapParams(L=L, s=2, k=L + 1)
        f = f_counts(params, 500)
        c = c_counts(params, 500)
        bad = [n for n in range(10, 501) if f[n] < c[n]]
        assert not bad, "s=2 L=%d violations at %s" % (L, bad[:5])
    _pass(2, "proven cases hold: s=1 k=L from n=1, s=2 k=L+1 from n=10, n<=500")


def test_criterion_3_golden_traces():
    with open(FIXTURE, encoding="utf-8") as handle:
        cases = json.load(handle)
    assert len(cases) == 5
    stated = {
        "c1-multiple-swap": {"a": 3},
        "c2-stack-trade": {"j": 11},
        "c3-window-split": {"j": 55, "c": 18, "d": 1, "x": 6, "y": 0},
        "c4-forbidden-stack": {"r": 36, "t": 1},
        "c5-forbidden-single": {"r": 35, "t": 0},
    }
    stated_inverse = {"c2-stack-trade": {"i": 10}}
    canon = lambda obj: json.dumps(obj, sort_keys=True, separators=(",", ":"))
    for case in cases:
        params = GapParams(**case["params"])
        alpha = Partition.from_text(case["input"])
        trace = phi(alpha, params)
        assert canon(trace.to_json_obj()) == canon(case["trace"]), case["name"]
        assert trace.aux == stated[case["name"]]
        inverse = psi_for_index(trace.label.index)(trace.output, params)
        assert canon(inverse.to_json_obj()) == canon(case["inverse"]), case["name"]
        assert inverse.output == alpha
        for key, value in stated_inverse.get(case["name"], {}).items():
            assert inverse.aux[key] == value
    _pass(3, "all five golden traces reproduce byte-identically, stated auxiliaries included")


def test_criterion_4_exhaustive_injection_suite():
    started = time.perf_counter()
    totals = []
    for k in (8, 9):
        params = GapParams(L=8, s=1, k=k)
        report = verify_exhaustive(params, 1, 60)
        assert report["pass"], report["failures"][:3]
        assert report["class_tallies"]["C2"] == 0 == report["class_tallies"]["C3"]
        assert sum(report["class_tallies"].values()) == report["checked"]
        totals.append(report["checked"])
    elapsed = time.perf_counter() - started
    _pass(4, "exhaustive suite green for k=8,9 over n<=60 (%s partitions, %.1fs)"
          % ("+".join(map(str, totals)), elapsed))


def test_criterion_5_sampled_injection_suite():
    started = time.perf_counter()
    checked = 0
    for k in (37, 38, 39):
        params = GapParams(L=37, s=2, k=k)
        report = verify_sampled(params, range(151, 171), seed=42, count=10**4)
        assert report["pass"], report["failures"][:3]
        assert report["checked"] == 20 * 10**4
        checked += report["checked"]
    elapsed = time.perf_counter() - started
    _pass(5, "sampled suite green: %d samples, seed 42, %.1fs" % (checked, elapsed))


def test_criterion_6_counting_shadow():
    for k in (37, 38, 39):
        params = GapParams(L=37, s=2, k=k)
        f = f_counts(params, 2000)
        c = c_counts(params, 2000)
        bad = [n for n in range(151, 2001) if f[n] < c[n]]
        assert not bad, "k=%d violations at %s" % (k, bad[:5])
    _pass(6, "F-count dominates C-count for s=2, L=37, k=37..39, 151<=n<=2000")


def test_criterion_7_series_identities():
    horizon = 10**4
    for s, L in [(1, 3), (2, 5), (3, 4)]:
        a, b, c = series_abc(s, L, horizon)
        assert a[0] == 1
        for n in range(1, horizon + 1):
            assert a[n] == b[n] - c[n - 1], "a=b-shift(c) fails at (%d,%d) n=%d" % (s, L, n)
        prefix = [0] * (horizon + 2)
        for n in range(horizon + 1):
            prefix[n + 1] = prefix[n] + a[n]
        for k in (1, 2, 7):
            d = series_d(k, s, L, horizon)
            for n in range(horizon + 1):
                assert d[n] == prefix[n + 1] - prefix[max(0, n - k + 1)]
    for args in [(3, 1, 1, 2, 1), (5, 2, 3, 7, 2), (4, 3, 0, 5, 4)]:
        assert series_h_direct(*args, horizon) == series_h_from_families(*args, horizon)
    _pass(7, "a=b-shift(c), d window sums and both h paths exact to n=10^4")


def test_criterion_8_asymptotics():
    for denoms in ([2, 3, 4], [3, 4, 5, 6, 7]):
        started = time.perf_counter()
        coins = CoinSystem(denoms)
        near = ratio_check(coins, 10**5)
        far = ratio_check(coins, 10**3)
        elapsed = time.perf_counter() - started
        assert abs(near - 1) <= 0.05, (denoms, near)
        assert abs(near - 1) < abs(far - 1), "ratio not approaching 1 for %s" % (denoms,)
        assert elapsed < 60, "ratio check took %.1fs" % elapsed

    s, L, n = 1, 3, 10**5
    started = time.perf_counter()
    a, _, _ = series_abc(s, L, n)
    norm = 1
    for v in range(s, s + L + 1):
        norm *= v
    for f in range(1, L):
        norm *= f  # (L-1)!
    a_ratio = a[n] * norm / n ** (L - 1)
    assert abs(a_ratio - 1) <= 0.05, a_ratio
    k = 5
    d = series_d(k, s, L, n)
    d_ratio = d[n] * norm / (k * n ** (L - 1))
    assert abs(d_ratio - 1) <= 0.05, d_ratio
    elapsed = time.perf_counter() - started
    assert elapsed < 60
    _pass(8, "growth ratios at n=10^5 within 5%%: coins, a (%.5f), d_5 (%.5f)"
          % (a_ratio, d_ratio))


def test_criterion_9_positivity_scan():
    direct = series_h_direct(3, 1, 1, 2, 1, 10**4)
    assembled = series_h_from_families(3, 1, 1, 2, 1, 10**4)
    assert list(direct.coeffs[:11]) == [-1, 1, 0, 0, 0, 2, 0, 2, 1, 3, 2]
    assert list(assembled.coeffs[:11]) == [-1, 1, 0, 0, 0, 2, 0, 2, 1, 3, 2]
    scan_direct = positivity_scan(direct, 0)
    scan_assembled = positivity_scan(assembled, 0)
    assert scan_direct == scan_assembled == 6
    _pass(9, "hand-derived prefix matches; last nonpositive index 6 on both paths "
          "(horizon 10^4; positivity beyond the horizon is not claimed)")
