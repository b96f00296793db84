import pytest

from gapparts import (
    ClassLabel,
    GapParams,
    InjectionTrace,
    MembershipError,
    NotInImageError,
    ParameterError,
    Partition,
    classify_c,
    classify_f,
    enumerate_c,
    enumerate_f,
    is_member_f,
    matching_c_classes,
    matching_f_classes,
    phi,
    phi1,
    phi4,
    psi1,
    psi2,
    psi3,
    psi4,
    psi5,
    psi_for_index,
    verify_exhaustive,
    verify_sampled,
)

P = Partition.from_text

SMALL = GapParams(L=8, s=1, k=8)       # strong regime for s=1
MID = GapParams(L=37, s=2, k=37)       # strong regime for s=2
MID38 = GapParams(L=37, s=2, k=38)
MID39 = GapParams(L=37, s=2, k=39)


# ---------------------------------------------------------------------------
# classification


def test_classify_c_examples():
    assert classify_c(
        P("9^7,15^3,16^2,20^9,30^8,40^2,80^1,97^5"), GapParams(L=110, s=3, k=112)
    ) is ClassLabel.C1
    assert classify_c(P("2^2,8^2"), SMALL) is ClassLabel.C4
    assert classify_c(
        P("4^2,7^2,11^2,13^2,16^2,19^2,32^2,55^1,58^3,61^4,76^5"),
        GapParams(L=105, s=3, k=105),
    ) is ClassLabel.C3
    assert classify_c(
        P("10^1,11^3,20^7,28^2,31^7,46^9,52^3,65^4"), GapParams(L=103, s=3, k=103)
    ) is ClassLabel.C2
    assert classify_c(P("2^6,8^1"), SMALL) is ClassLabel.C5


def test_classify_c_rejects_bad_input():
    with pytest.raises(MembershipError):
        classify_c(P("1^3"), SMALL)  # part below the window
    with pytest.raises(MembershipError):
        classify_c(Partition(), SMALL)  # weight zero


def test_classification_is_a_set_partition():
    for params in (SMALL, GapParams(L=9, s=1, k=9), GapParams(L=4, s=2, k=5)):
        for n in range(1, 26):
            for alpha in enumerate_c(params, n):
                matches = matching_c_classes(alpha, params)
                assert len(matches) == 1
                assert classify_c(alpha, params) is matches[0]


def test_c2_c3_vacuous_for_s1():
    for n in range(1, 41):
        for alpha in enumerate_c(SMALL, n):
            assert classify_c(alpha, SMALL) in (
                ClassLabel.C1,
                ClassLabel.C4,
                ClassLabel.C5,
            )


def test_classify_f_examples():
    assert classify_f(
        P("3^3,9^6,15^3,16^2,20^9,30^8,40^2,80^1,97^5"), GapParams(L=110, s=3, k=112)
    ) is ClassLabel.F1
    assert classify_f(P("1^12,2^4"), SMALL) is ClassLabel.F4
    assert classify_f(P("2^1,5^1,7^1,39^4"), MID) is None


def test_classify_f_requires_strong_regime():
    weak = GapParams(L=7, s=1, k=7)
    with pytest.raises(ParameterError, match=r"requires L >= 2s\^3\+5s\^2\+1"):
        classify_f(P("1^2,6^1"), weak)
    with pytest.raises(MembershipError):
        classify_f(P("2^4"), SMALL)  # min part is not s


def test_f_classes_pairwise_disjoint_on_family():
    for k in (8, 9):
        params = GapParams(L=8, s=1, k=k)
        for n in range(1, 31):
            for beta in enumerate_f(params, n):
                assert len(matching_f_classes(beta, params)) <= 1


# ---------------------------------------------------------------------------
# forward rules on worked examples


def test_phi1_small_example():
    trace = phi(P("2^1,9^2"), SMALL)
    assert trace.label is ClassLabel.C1
    assert trace.aux == {"a": 2}
    assert trace.output == P("1^2,9^2")
    assert psi1(trace.output, SMALL).output == P("2^1,9^2")


def test_phi4_small_example():
    trace = phi(P("2^2,8^2"), SMALL)
    assert trace.aux == {"r": 8, "t": 0}
    assert trace.output == P("1^12,2^4")


def test_phi5_small_example():
    trace = phi(P("2^6,8^1"), SMALL)
    assert trace.aux == {"r": 8, "t": 0}
    assert trace.output == P("1^4,2^8")


def test_phi3_decomposition_branches():
    # s=2: parts are odd, so j = 2c + 1 and the margin c-s-d-2 sweeps both
    # parities as j grows
    expected = {19: (2, 0), 21: (1, 1), 23: (3, 0), 25: (2, 1)}
    for j, (x, y) in expected.items():
        alpha = Partition({j: 1, 39: 4})
        trace = phi(alpha, MID)
        assert trace.label is ClassLabel.C3
        assert (trace.aux["x"], trace.aux["y"]) == (x, y)
        assert trace.aux["j"] == j
        inverse = psi3(trace.output, MID)
        assert inverse.output == alpha
        assert inverse.aux["w"] == j


def test_phi3_with_nonunit_remainder():
    # s=3 gives d = 2 for j = 35: the stacked value is s+d = 5
    params = GapParams(L=100, s=3, k=100)
    alpha = Partition({35: 1, 103: 10})
    trace = phi(alpha, params)
    assert trace.label is ClassLabel.C3
    assert trace.aux == {"j": 35, "c": 11, "d": 2, "x": 2, "y": 0}
    assert trace.output == Partition({3: 1, 5: 4, 6: 2, 103: 10})
    assert psi3(trace.output, params).output == alpha

    alpha = Partition({34: 1, 103: 10})
    trace = phi(alpha, params)
    assert trace.aux == {"j": 34, "c": 11, "d": 1, "x": 1, "y": 1}
    assert psi3(trace.output, params).output == alpha


def test_phi_requires_membership_and_regime():
    with pytest.raises(MembershipError):
        phi(P("1^5"), SMALL)
    weak = GapParams(L=7, s=1, k=7)
    with pytest.raises(ParameterError, match=r"requires L >= 2s\^3\+5s\^2\+1"):
        phi(P("2^1,5^1"), weak)
    with pytest.raises(ParameterError, match="requires weight n >="):
        phi(P("3^1"), MID)  # weight 3 < 151


def test_phi_branch_class_guard():
    with pytest.raises(MembershipError, match="phi4 requires a C4"):
        phi4(P("2^1,9^2"), SMALL)
    with pytest.raises(MembershipError, match="phi1 requires a C1"):
        phi1(P("2^2,8^2"), SMALL)


def test_trace_weight_guard():
    with pytest.raises(AssertionError):
        InjectionTrace(ClassLabel.C1, P("2^1"), P("3^1"), {})


# ---------------------------------------------------------------------------
# inverse rules reject everything outside the forward image


def test_psi1_bound_rejections():
    beta = Partition({2: 20, 37: 3})  # s*g_s = 40 > 39
    assert classify_f(beta, MID39) is ClassLabel.F1
    with pytest.raises(NotInImageError, match=r"s\*g_s <= s\+L"):
        psi1(beta, MID39)

    beta = Partition({2: 19, 37: 3, 39: 1})  # s*g_s = 38 = k
    assert classify_f(beta, MID38) is ClassLabel.F1
    with pytest.raises(NotInImageError, match=r"s\*g_s != k"):
        psi1(beta, MID38)


def test_psi1_wrong_class_rejected():
    with pytest.raises(NotInImageError, match="not in F1"):
        psi1(P("1^12,2^4"), SMALL)  # an F4 partition


def test_psi2_rejections():
    beta = Partition({2: 1, 6: 1, 39: 4})  # i = 3, i+1 even
    assert classify_f(beta, MID) is ClassLabel.F2
    with pytest.raises(NotInImageError, match="not a multiple of s"):
        psi2(beta, MID)

    beta = Partition({2: 1, 34: 1, 39: 2})  # i = 17, i+1 past the window
    assert classify_f(beta, MID) is ClassLabel.F2
    with pytest.raises(NotInImageError, match=r"i\+1 <= 2s\^2\+5s-1"):
        psi2(beta, MID)


def test_psi3_rejects_unreachable_shapes():
    # valid F3 partition whose 3s-block multiplicity (2) can never arise:
    # the forward rule puts y in {0, 1} copies at 3s
    beta = Partition({2: 1, 3: 3, 6: 2, 39: 4})
    assert classify_f(beta, MID) is ClassLabel.F3
    with pytest.raises(NotInImageError, match="re-applying"):
        psi3(beta, MID)


def test_psi4_rejections():
    beta = Partition({2: 33, 5: 1, 39: 2})  # g_s = 33 not divisible by r-2 = 16
    assert classify_f(beta, MID) is ClassLabel.F4
    with pytest.raises(NotInImageError, match="divisible by r-2"):
        psi4(beta, MID)


def test_psi5_rejections():
    beta = Partition({2: 15, 4: 1, 39: 4})  # t = 0 needs two parts 2s
    assert classify_f(beta, MID38) is ClassLabel.F5
    with pytest.raises(NotInImageError, match=r"g_\(2s\) >= 2"):
        psi5(beta, MID38)


def test_psi_for_index():
    assert psi_for_index(1) is psi1
    assert psi_for_index(5) is psi5
    with pytest.raises(KeyError):
        psi_for_index(6)


# ---------------------------------------------------------------------------
# systematic class-3 coverage (rare under uniform sampling)


def c3_family_members():
    # odd parts only (s=2), window multiplicities <= 1, one part past the
    # window, heavy filler to clear the weight threshold
    for j in range(19, 40, 2):
        if j == MID.k:
            continue
        yield Partition({j: 1, 39: 4})
        yield Partition({3: 1, 5: 1, j: 1, 39: 4})
        yield Partition({7: 1, 9: 1, 11: 1, j: 1, 39: 4})


def test_crafted_c3_round_trips():
    seen = set()
    for alpha in c3_family_members():
        assert classify_c(alpha, MID) is ClassLabel.C3
        trace = phi(alpha, MID)
        assert trace.output.weight == alpha.weight
        assert is_member_f(trace.output, MID)
        assert classify_f(trace.output, MID) is ClassLabel.F3
        inverse = psi3(trace.output, MID)
        assert inverse.output == alpha
        seen.add(trace.output)
    assert len(seen) == len(list(c3_family_members()))


# ---------------------------------------------------------------------------
# harness


def test_verify_exhaustive_small():
    report = verify_exhaustive(SMALL, 1, 30)
    assert report["pass"] and not report["failures"]
    assert report["class_tallies"]["C2"] == 0 == report["class_tallies"]["C3"]
    assert sum(report["class_tallies"].values()) == report["checked"]


def test_verify_sampled_small():
    report = verify_sampled(MID, [151, 155], seed=7, count=300)
    assert report["pass"] and report["checked"] == 600
    again = verify_sampled(MID, [151, 155], seed=7, count=300)
    assert report == again


def test_verify_preconditions():
    with pytest.raises(ValueError):
        verify_exhaustive(SMALL, 5, 4)
    with pytest.raises(ParameterError, match="requires weight"):
        verify_sampled(MID, [150], seed=0, count=10)
    with pytest.raises(ParameterError, match="requires L >="):
        verify_exhaustive(GapParams(L=7, s=1, k=7), 1, 10)
