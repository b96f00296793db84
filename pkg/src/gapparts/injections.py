"""Weight-preserving injections from the C-family into the F-family.

Every C-family partition of weight n falls into exactly one of five classes;
each class has its own rewrite rule producing an F-family partition of the
same weight, and each rule has an explicit left inverse.  Together the five
rules define an injection, which is what forces the F-family count to
dominate the C-family count at every sufficiently large weight.

Writing k = r*s + t with 0 <= t <= s-1, and f_v / g_v for the multiplicity
of v on the C / F side, the classes are:

C1: f_k = 0 and some multiple a*s (a >= 2) occurs.
C2: f_k = 0, no multiple of s occurs, and some j in [s+1, 2s^2+5s-1] has
    f_j >= s.
C3: f_k = 0, no multiple of s occurs, and every j in that window has
    f_j <= s-1.
C4: f_k >= 2.
C5: f_k = 1.

F1: 2 <= g_s <= r+1 and g_(i*s) = 0 for 2 <= i < g_s.
F2: g_s = 1 and exactly one i >= 2 has g_(i*s) >= 1, with g_(i*s) = 1.
F3: g_s = 1 and g_(2s) + g_(3s) >= 2.
F4: g_s >= 2r - 4.
F5: g_s = r - 4 and g_(2s) >= 1.

All maps require the strong regime L >= 2s^3 + 5s^2 + 1 (hence r >= 2s^2+5s
>= 7), which is what makes F1..F5 pairwise disjoint.  The inverses accept
exactly the forward images: each one re-derives its auxiliary data, rebuilds
the C-side partition, checks its class, and re-applies the forward rule,
rejecting anything that fails to reproduce the input byte for byte.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import MembershipError, NotInImageError, ParameterError
from .partitions import (
    GapParams,
    Partition,
    enumerate_c,
    injection_weight_threshold,
    is_member_c,
    is_member_f,
    sample_c,
    strong_gap_threshold,
)

__all__ = [
    "ClassLabel",
    "InjectionTrace",
    "matching_c_classes",
    "matching_f_classes",
    "classify_c",
    "classify_f",
    "phi",
    "phi1",
    "phi2",
    "phi3",
    "phi4",
    "phi5",
    "psi1",
    "psi2",
    "psi3",
    "psi4",
    "psi5",
    "psi_for_index",
    "verify_exhaustive",
    "verify_sampled",
]


class ClassLabel(enum.Enum):
    """The ten class labels: C1..C5 on the domain side, F1..F5 on the image side."""

    C1 = ("C", 1)
    C2 = ("C", 2)
    C3 = ("C", 3)
    C4 = ("C", 4)
    C5 = ("C", 5)
    F1 = ("F", 1)
    F2 = ("F", 2)
    F3 = ("F", 3)
    F4 = ("F", 4)
    F5 = ("F", 5)

    @property
    def family(self) -> str:
        return self.value[0]

    @property
    def index(self) -> int:
        return self.value[1]

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class InjectionTrace:
    """Record of one rewrite: class label, auxiliaries, input and output."""

    label: ClassLabel
    input: Partition
    output: Partition
    aux: dict

    def __post_init__(self):
        if self.input.weight != self.output.weight:
            raise AssertionError(
                "weight not preserved: %d -> %d"
                % (self.input.weight, self.output.weight)
            )

    def to_json_obj(self) -> dict:
        return {
            "class": self.label.name,
            "aux": {k: int(v) for k, v in sorted(self.aux.items())},
            "input": self.input.to_text(),
            "output": self.output.to_text(),
        }


# ---------------------------------------------------------------------------
# regime checks and small helpers


def _require_strong(params: GapParams) -> None:
    if not params.strong_regime:
        raise ParameterError(
            "requires L >= 2s^3+5s^2+1 (got L=%d, need >= %d for s=%d)"
            % (params.L, strong_gap_threshold(params.s), params.s)
        )


def _window_top(s: int) -> int:
    # Upper end of the scan window used by the C2/C3 split.
    return 2 * s * s + 5 * s - 1


def _min_higher_multiple(p: Partition, params: GapParams) -> Optional[int]:
    # Smallest a >= 2 with part a*s present, or None.
    s = params.s
    for a in range(2, params.max_part // s + 1):
        if p.multiplicity(a * s) >= 1:
            return a
    return None


def _min_stacked_part(p: Partition, s: int) -> Optional[int]:
    # Smallest part value whose multiplicity reaches s, or None.
    for v, m in p.items():
        if m >= s:
            return v
    return None


def _modified(p: Partition, changes) -> Partition:
    # Apply (value, delta) multiplicity changes; deltas must keep counts >= 0.
    m = dict(p.items())
    for value, delta in changes:
        nv = m.get(value, 0) + delta
        if nv < 0:
            raise MembershipError(
                "cannot remove %d copies of part %d (only %d present)"
                % (-delta, value, m.get(value, 0))
            )
        if nv == 0:
            m.pop(value, None)
        else:
            m[value] = nv
    return Partition._from_ascending_items(tuple(sorted(m.items())))


# ---------------------------------------------------------------------------
# classification


def matching_c_classes(p: Partition, params: GapParams) -> tuple[ClassLabel, ...]:
    """All C-class labels whose defining predicate holds (evaluated independently)."""
    s = params.s
    fk = p.multiplicity(params.k)
    has_multiple = _min_higher_multiple(p, params) is not None
    window_top = min(_window_top(s), params.max_part)
    has_stack = any(
        p.multiplicity(j) >= s for j in range(s + 1, window_top + 1)
    )
    out = []
    if fk == 0 and has_multiple:
        out.append(ClassLabel.C1)
    if fk == 0 and not has_multiple and has_stack:
        out.append(ClassLabel.C2)
    if fk == 0 and not has_multiple and not has_stack:
        out.append(ClassLabel.C3)
    if fk >= 2:
        out.append(ClassLabel.C4)
    if fk == 1:
        out.append(ClassLabel.C5)
    return tuple(out)


def classify_c(p: Partition, params: GapParams) -> ClassLabel:
    """The unique C-class of a nonempty C-family partition."""
    if not is_member_c(p, params):
        raise MembershipError("not in the C-family for %r" % (params,))
    if p.weight < 1:
        raise MembershipError("classification needs weight >= 1")
    fk = p.multiplicity(params.k)
    if fk >= 2:
        return ClassLabel.C4
    if fk == 1:
        return ClassLabel.C5
    if _min_higher_multiple(p, params) is not None:
        return ClassLabel.C1
    window_top = min(_window_top(params.s), params.max_part)
    if any(p.multiplicity(j) >= params.s for j in range(params.s + 1, window_top + 1)):
        label = ClassLabel.C2
    else:
        label = ClassLabel.C3
    # For s=1 every part is a multiple of s, so a nonempty partition with
    # f_k = 0 always lands in C1 and the two branches above are unreachable.
    assert params.s > 1, "C2/C3 must be vacuous when s=1"
    return label


def matching_f_classes(p: Partition, params: GapParams) -> tuple[ClassLabel, ...]:
    """All F-class labels whose defining predicate holds (evaluated independently)."""
    s, r = params.s, params.r
    gs = p.multiplicity(s)
    multiples = []
    for i in range(2, params.max_part // s + 1):
        m = p.multiplicity(i * s)
        if m:
            multiples.append((i, m))
    out = []
    if 2 <= gs <= r + 1 and all(
        p.multiplicity(i * s) == 0 for i in range(2, gs)
    ):
        out.append(ClassLabel.F1)
    if gs == 1 and len(multiples) == 1 and multiples[0][1] == 1:
        out.append(ClassLabel.F2)
    if gs == 1 and p.multiplicity(2 * s) + p.multiplicity(3 * s) >= 2:
        out.append(ClassLabel.F3)
    if gs >= 2 * r - 4:
        out.append(ClassLabel.F4)
    if gs == r - 4 and p.multiplicity(2 * s) >= 1:
        out.append(ClassLabel.F5)
    return tuple(out)


def classify_f(p: Partition, params: GapParams) -> Optional[ClassLabel]:
    """The F-class of an F-family partition, or None when no class matches.

    Requires the strong regime; there the five classes are pairwise disjoint,
    which is asserted.
    """
    if not is_member_f(p, params):
        raise MembershipError("not in the F-family for %r" % (params,))
    _require_strong(params)
    labels = matching_f_classes(p, params)
    if len(labels) > 1:
        raise AssertionError(
            "F-classes not disjoint on %r: %s" % (p, [str(x) for x in labels])
        )
    return labels[0] if labels else None


# ---------------------------------------------------------------------------
# forward rules


def _phi1_apply(p: Partition, params: GapParams):
    s = params.s
    a = _min_higher_multiple(p, params)
    if a is None:
        raise MembershipError("no part equal to a multiple a*s with a >= 2")
    out = _modified(p, [(a * s, -1), (s, a)])
    return out, {"a": a}


def _phi2_apply(p: Partition, params: GapParams):
    s = params.s
    j = _min_stacked_part(p, s)
    if j is None:
        raise MembershipError("no part with multiplicity >= s")
    out = _modified(p, [(j, -s), (s, 1), ((j - 1) * s, 1)])
    return out, {"j": j}


def _phi3_apply(p: Partition, params: GapParams):
    s = params.s
    floor = _window_top(s) + 2  # = 2s^2 + 5s + 1
    j = None
    for v, _ in p.items():
        if v >= floor:
            j = v
            break
    if j is None:
        raise MembershipError(
            "no part >= 2s^2+5s+1 = %d; weight below the guaranteed threshold" % floor
        )
    c, d = divmod(j, s)
    rest = c - s - d - 2
    if d == 0 or rest < 2:
        raise MembershipError("part %d does not decompose as c*s+d with the "
                              "required margins" % j)
    y = rest & 1
    x = (rest - 3 * y) // 2
    out = _modified(
        p,
        [(j, -1), (s, 1), (s + d, s + 1)]
        + ([(2 * s, x)] if x else [])
        + ([(3 * s, y)] if y else []),
    )
    return out, {"j": j, "c": c, "d": d, "x": x, "y": y}


def _phi4_apply(p: Partition, params: GapParams):
    s, r, t = params.s, params.r, params.t
    fk = p.multiplicity(params.k)
    if fk < 2:
        raise MembershipError("needs multiplicity >= 2 at the forbidden part")
    out = _modified(
        p, [(params.k, -fk), (s, fk * (r - 2)), (2 * s + t, fk)]
    )
    return out, {"r": r, "t": t}


def _phi5_apply(p: Partition, params: GapParams):
    s, r, t = params.s, params.r, params.t
    if p.multiplicity(params.k) != 1:
        raise MembershipError("needs multiplicity exactly 1 at the forbidden part")
    if t != 0:
        changes = [(params.k, -1), (s, r - 4), (2 * s, 1), (2 * s + t, 1)]
    else:
        changes = [(params.k, -1), (s, r - 4), (2 * s, 2)]
    out = _modified(p, changes)
    return out, {"r": r, "t": t}


_PHI_APPLY: dict[int, Callable] = {
    1: _phi1_apply,
    2: _phi2_apply,
    3: _phi3_apply,
    4: _phi4_apply,
    5: _phi5_apply,
}


def _phi_public(index: int, p: Partition, params: GapParams,
                _label: Optional[ClassLabel] = None) -> InjectionTrace:
    _require_strong(params)
    label = _label if _label is not None else classify_c(p, params)
    if label.index != index:
        raise MembershipError(
            "phi%d requires a C%d partition (classified %s)" % (index, index, label)
        )
    if index == 3 and p.weight < injection_weight_threshold(params.s):
        raise ParameterError(
            "requires weight n >= 2s^5+8s^4+s^3-14s^2+3s+1 = %d (got n=%d)"
            % (injection_weight_threshold(params.s), p.weight)
        )
    out, aux = _PHI_APPLY[index](p, params)
    if index == 1:
        assert 2 <= aux["a"] <= params.r + 1
    return InjectionTrace(ClassLabel(("C", index)), p, out, aux)


def phi1(p: Partition, params: GapParams) -> InjectionTrace:
    """C1 rule: trade one part a*s (a minimal, a >= 2) for a copies of s."""
    return _phi_public(1, p, params)


def phi2(p: Partition, params: GapParams) -> InjectionTrace:
    """C2 rule: trade s copies of the minimal stacked part j for one s plus
    one part (j-1)*s."""
    return _phi_public(2, p, params)


def phi3(p: Partition, params: GapParams) -> InjectionTrace:
    """C3 rule: with j = c*s+d the smallest part above the scan window, trade
    one j for one s, s+1 copies of s+d, x copies of 2s and y of 3s, where
    c-s-d-2 = 2x+3y and y is 0 or 1."""
    return _phi_public(3, p, params)


def phi4(p: Partition, params: GapParams) -> InjectionTrace:
    """C4 rule: trade every copy of k for (r-2) copies of s and one copy of
    2s+t apiece."""
    return _phi_public(4, p, params)


def phi5(p: Partition, params: GapParams) -> InjectionTrace:
    """C5 rule: trade the single k for r-4 copies of s plus two extra parts
    (2s and 2s+t, or twice 2s when t = 0)."""
    return _phi_public(5, p, params)


def phi(p: Partition, params: GapParams) -> InjectionTrace:
    """Classify and apply the matching rewrite rule.

    Valid in the strong regime with L <= k <= s+L and weight at least
    2s^5+8s^4+s^3-14s^2+3s+1; each violated bound is reported verbatim.
    """
    if not is_member_c(p, params):
        raise MembershipError("not in the C-family for %r" % (params,))
    _require_strong(params)
    if not params.L <= params.k <= params.max_part:
        raise ParameterError(
            "requires L <= k <= s+L (got k=%d with L=%d, s=%d)"
            % (params.k, params.L, params.s)
        )
    threshold = injection_weight_threshold(params.s)
    if p.weight < threshold:
        raise ParameterError(
            "requires weight n >= 2s^5+8s^4+s^3-14s^2+3s+1 = %d (got n=%d)"
            % (threshold, p.weight)
        )
    label = classify_c(p, params)
    return _phi_public(label.index, p, params, _label=label)


# ---------------------------------------------------------------------------
# inverse rules

# Each inverse rebuilds the C-side partition, then certifies image membership
# by re-applying the forward rule and demanding an exact match.


def _certify(index: int, alpha: Partition, beta: Partition,
             params: GapParams) -> None:
    if ClassLabel(("C", index)) not in matching_c_classes(alpha, params):
        raise NotInImageError(
            "not in the image of phi%d: reconstruction leaves C%d" % (index, index)
        )
    try:
        again, _ = _PHI_APPLY[index](alpha, params)
    except MembershipError as exc:
        raise NotInImageError(
            "not in the image of phi%d: %s" % (index, exc)
        ) from exc
    if again != beta:
        raise NotInImageError(
            "not in the image of phi%d: re-applying the rule gives %r" % (index, again)
        )


def _psi_entry(index: int, p: Partition, params: GapParams) -> None:
    _require_strong(params)
    if not is_member_f(p, params):
        raise MembershipError("not in the F-family for %r" % (params,))
    if ClassLabel(("F", index)) not in matching_f_classes(p, params):
        raise NotInImageError("not in F%d" % index)


def psi1(p: Partition, params: GapParams) -> InjectionTrace:
    """Inverse of the C1 rule: all g_s copies of s become one part s*g_s."""
    _psi_entry(1, p, params)
    s = params.s
    gs = p.multiplicity(s)
    w = s * gs
    if w > params.max_part:
        raise NotInImageError("requires s*g_s <= s+L (got %d > %d)" % (w, params.max_part))
    if w == params.k:
        raise NotInImageError("requires s*g_s != k (got %d)" % w)
    alpha = _modified(p, [(s, -gs), (w, 1)])
    _certify(1, alpha, p, params)
    return InjectionTrace(ClassLabel.F1, p, alpha, {"a": gs})


def psi2(p: Partition, params: GapParams) -> InjectionTrace:
    """Inverse of the C2 rule: the lone s and the lone i*s become s copies of i+1."""
    _psi_entry(2, p, params)
    s = params.s
    i = next(
        i for i in range(2, params.max_part // s + 1) if p.multiplicity(i * s) == 1
    )
    j = i + 1
    if j > _window_top(s):
        raise NotInImageError(
            "requires i+1 <= 2s^2+5s-1 (got i+1=%d)" % j
        )
    if j % s == 0:
        raise NotInImageError("requires i+1 not a multiple of s (got i+1=%d)" % j)
    alpha = _modified(p, [(s, -1), (i * s, -1), (j, s)])
    _certify(2, alpha, p, params)
    return InjectionTrace(ClassLabel.F2, p, alpha, {"i": i})


def psi3(p: Partition, params: GapParams) -> InjectionTrace:
    """Inverse of the C3 rule: recombine s, the 2s/3s blocks and the s+1
    stacked copies of i into the single part w they came from."""
    _psi_entry(3, p, params)
    s = params.s
    candidates = [
        v for v in range(s + 1, 2 * s) if p.multiplicity(v) >= s + 1
    ]
    if len(candidates) != 1:
        raise NotInImageError(
            "requires a unique i in [s+1, 2s-1] with multiplicity >= s+1 "
            "(found %d)" % len(candidates)
        )
    i = candidates[0]
    g2 = p.multiplicity(2 * s)
    g3 = p.multiplicity(3 * s)
    w = s + 2 * s * g2 + 3 * s * g3 + i * (s + 1)
    if w > params.max_part:
        raise NotInImageError("requires w <= s+L (got w=%d)" % w)
    if w == params.k:
        raise NotInImageError("requires w != k (got w=%d)" % w)
    changes = [(s, -1), (i, -(s + 1)), (w, 1)]
    if g2:
        changes.append((2 * s, -g2))
    if g3:
        changes.append((3 * s, -g3))
    alpha = _modified(p, changes)
    _certify(3, alpha, p, params)
    return InjectionTrace(ClassLabel.F3, p, alpha, {"i": i, "w": w})


def psi4(p: Partition, params: GapParams) -> InjectionTrace:
    """Inverse of the C4 rule: g_s/(r-2) copies of k come back."""
    _psi_entry(4, p, params)
    s, r, t = params.s, params.r, params.t
    gs = p.multiplicity(s)
    if gs % (r - 2) != 0:
        raise NotInImageError(
            "requires g_s divisible by r-2 (got g_s=%d, r-2=%d)" % (gs, r - 2)
        )
    q = gs // (r - 2)
    if p.multiplicity(2 * s + t) < q:
        raise NotInImageError(
            "requires g_(2s+t) >= g_s/(r-2) (got %d < %d)"
            % (p.multiplicity(2 * s + t), q)
        )
    alpha = _modified(p, [(s, -gs), (2 * s + t, -q), (params.k, q)])
    _certify(4, alpha, p, params)
    return InjectionTrace(ClassLabel.F4, p, alpha, {"r": r, "t": t})


def psi5(p: Partition, params: GapParams) -> InjectionTrace:
    """Inverse of the C5 rule: the single k comes back."""
    _psi_entry(5, p, params)
    s, r, t = params.s, params.r, params.t
    if t != 0:
        if p.multiplicity(2 * s + t) < 1:
            raise NotInImageError("requires g_(2s+t) >= 1 when t != 0")
        changes = [(s, -(r - 4)), (2 * s, -1), (2 * s + t, -1), (params.k, 1)]
    else:
        if p.multiplicity(2 * s) < 2:
            raise NotInImageError("requires g_(2s) >= 2 when t = 0")
        changes = [(s, -(r - 4)), (2 * s, -2), (params.k, 1)]
    alpha = _modified(p, changes)
    _certify(5, alpha, p, params)
    return InjectionTrace(ClassLabel.F5, p, alpha, {"r": r, "t": t})


_PSI: dict[int, Callable] = {1: psi1, 2: psi2, 3: psi3, 4: psi4, 5: psi5}


def psi_for_index(index: int) -> Callable:
    """The inverse rule matching a class index 1..5."""
    return _PSI[index]


# ---------------------------------------------------------------------------
# property verification harness


def _check_one(alpha: Partition, params: GapParams) -> tuple[int, Optional[Partition], Optional[str]]:
    # Runs every per-element property; returns (class index, image, failure).
    matches = matching_c_classes(alpha, params)
    if len(matches) != 1:
        return 0, None, "classification not unique for %r: %s" % (
            alpha, [str(m) for m in matches],
        )
    trace = phi(alpha, params)
    if trace.label is not matches[0]:
        return 0, None, "dispatch label %s disagrees with %s" % (trace.label, matches[0])
    beta = trace.output
    if not is_member_f(beta, params):
        return 0, None, "image %r not in the F-family" % (beta,)
    flabel = classify_f(beta, params)
    if flabel is None or flabel.index != trace.label.index:
        return 0, None, "image %r classified %s, expected F%d" % (
            beta, flabel, trace.label.index,
        )
    inverse = _PSI[trace.label.index](beta, params)
    if inverse.output != alpha:
        return 0, None, "round trip gave %r from %r" % (inverse.output, alpha)
    return trace.label.index, beta, None


def _verification_preamble(params: GapParams, n_values) -> None:
    _require_strong(params)
    threshold = injection_weight_threshold(params.s)
    low = min(n_values)
    if low < threshold:
        raise ParameterError(
            "requires weight n >= 2s^5+8s^4+s^3-14s^2+3s+1 = %d (got n=%d)"
            % (threshold, low)
        )


def verify_exhaustive(params: GapParams, n_min: int, n_max: int) -> dict:
    """Check every per-element property on all of C at each weight in range.

    Also checks global injectivity per weight (image size equals domain size)
    since the full domain is visited.
    """
    if n_min > n_max:
        raise ValueError("n_min must not exceed n_max")
    ns = range(n_min, n_max + 1)
    _verification_preamble(params, ns)
    tallies = {i: 0 for i in range(1, 6)}
    failures: list[str] = []
    checked = 0
    for n in ns:
        domain = 0
        images: set[Partition] = set()
        for alpha in enumerate_c(params, n):
            domain += 1
            checked += 1
            index, beta, failure = _check_one(alpha, params)
            if failure is not None:
                if len(failures) < 25:
                    failures.append("n=%d: %s" % (n, failure))
                continue
            tallies[index] += 1
            images.add(beta)
        if not failures and len(images) != domain:
            failures.append(
                "n=%d: image collision, %d images from %d inputs"
                % (n, len(images), domain)
            )
    return {
        "mode": "exhaustive",
        "params": {"L": params.L, "s": params.s, "k": params.k},
        "n_min": n_min,
        "n_max": n_max,
        "checked": checked,
        "class_tallies": {"C%d" % i: tallies[i] for i in range(1, 6)},
        "failures": failures,
        "pass": not failures,
    }


def verify_sampled(params: GapParams, n_values, seed: int, count: int) -> dict:
    """Check the per-element properties on uniform samples at each weight.

    Samples are drawn by unranking uniform indices from the seeded generator,
    so a report is reproducible from (params, n_values, seed, count).
    """
    n_values = list(n_values)
    _verification_preamble(params, n_values)
    tallies = {i: 0 for i in range(1, 6)}
    failures: list[str] = []
    checked = 0
    for n in n_values:
        for alpha in sample_c(params, n, seed, count):
            checked += 1
            index, _, failure = _check_one(alpha, params)
            if failure is not None:
                if len(failures) < 25:
                    failures.append("n=%d: %s" % (n, failure))
                continue
            tallies[index] += 1
    return {
        "mode": "sample",
        "params": {"L": params.L, "s": params.s, "k": params.k},
        "n_values": n_values,
        "seed": seed,
        "count_per_n": count,
        "checked": checked,
        "class_tallies": {"C%d" % i: tallies[i] for i in range(1, 6)},
        "failures": failures,
        "pass": not failures,
    }
