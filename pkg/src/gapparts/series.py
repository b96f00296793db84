"""Exact truncated power series over the integers.

A TruncatedSeries holds the coefficients c0..cN of a formal power series up
to an explicit horizon N.  Division exists only for binomials (1 - q^m) via
the linear recurrence y[n] = x[n] + y[n-m]; every generating function built
here has a denominator that is a product of such binomials, so nothing more
general is needed.  Arithmetic on mismatched horizons truncates to the
shorter one.

Builders cover the package's generating functions: the two partition-family
series, the a/b/c coefficient triple, the window-sum family d, its shift e,
and the signed combination h whose eventual positivity the scanner probes.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from ._backend import kernels
from .errors import ParameterError
from .partitions import GapParams

__all__ = [
    "TruncatedSeries",
    "mul_geometric",
    "pochhammer_inverse",
    "series_c",
    "series_f",
    "series_abc",
    "series_d",
    "series_e",
    "series_h",
    "series_h_direct",
    "series_h_from_families",
    "positivity_scan",
]

# Dense products fall back to the O(N^2) kernel only when both operands have
# many nonzero coefficients; numerator polynomials are nearly all zeros.
_SPARSE_LIMIT = 32


class TruncatedSeries:
    """Exact integer coefficients c0..cN of a series truncated at horizon N."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = cs

    @classmethod
    def one(cls, horizon: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * horizon)

    @classmethod
    def from_terms(cls, terms, horizon: int) -> "TruncatedSeries":
        """Polynomial from (exponent, coefficient) pairs or a mapping.

        Repeated exponents accumulate; exponents past the horizon drop.
        """
        if isinstance(terms, Mapping):
            terms = terms.items()
        cs = [0] * (horizon + 1)
        for e, c in terms:
            if e < 0:
                raise ValueError("exponents must be >= 0")
            if e <= horizon:
                cs[e] += c
        return cls(cs)

    @property
    def horizon(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.horizon:
            raise IndexError("coefficient index %d outside [0, %d]" % (n, self.horizon))
        return self._coeffs[n]

    def nonzero_count(self) -> int:
        return sum(1 for c in self._coeffs if c)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.horizon, other.horizon)
        return TruncatedSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.horizon, other.horizon)
        return TruncatedSeries(
            [self._coeffs[i] - other._coeffs[i] for i in range(n + 1)]
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.horizon, other.horizon)
        sparse, dense = self, other
        if other.nonzero_count() < sparse.nonzero_count():
            sparse, dense = other, self
        if sparse.nonzero_count() <= _SPARSE_LIMIT:
            out = [0] * (n + 1)
            for i, ci in enumerate(sparse._coeffs):
                if ci == 0 or i > n:
                    continue
                dc = dense._coeffs
                for j in range(n - i + 1):
                    out[i + j] += ci * dc[j]
            return TruncatedSeries(out)
        return TruncatedSeries(
            kernels.cauchy_product(list(self._coeffs), list(other._coeffs), n)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.horizon >= 8 else ""
        return "TruncatedSeries([%s%s], horizon=%d)" % (head, tail, self.horizon)


def mul_geometric(x: TruncatedSeries, m: int) -> TruncatedSeries:
    """x / (1 - q^m): the recurrence y[n] = x[n] + y[n-m], exact."""
    if m < 1:
        raise ParameterError("requires m >= 1 (got m=%d)" % m)
    return TruncatedSeries(kernels.geometric_divide(list(x.coeffs), m))


def pochhammer_inverse(start: int, count: int, horizon: int) -> TruncatedSeries:
    """1 / ((1-q^start)(1-q^(start+1))...(1-q^(start+count-1))) truncated.

    Coefficient n counts the partitions of n into parts from
    [start, start+count-1].
    """
    if start < 1:
        raise ParameterError("requires start >= 1 (got start=%d)" % start)
    if count < 1:
        raise ParameterError("requires count >= 1 (got count=%d)" % count)
    out = TruncatedSeries.one(horizon)
    for m in range(start, start + count):
        if m > horizon:
            break
        out = mul_geometric(out, m)
    return out


def _shifted_difference(base: TruncatedSeries, shift_pos: int, shift_neg: int) -> TruncatedSeries:
    # base[n - shift_pos] - base[n - shift_neg] with out-of-range terms zero
    cs = base.coeffs
    out = []
    for n in range(base.horizon + 1):
        v = cs[n - shift_pos] if n >= shift_pos else 0
        if n >= shift_neg:
            v -= cs[n - shift_neg]
        out.append(v)
    return TruncatedSeries(out)


def series_c(params: GapParams, horizon: int) -> TruncatedSeries:
    """Generating function of the C-family counts: 1/(q^(s+1); q)_L."""
    return pochhammer_inverse(params.s + 1, params.L, horizon)


def series_f(params: GapParams, horizon: int) -> TruncatedSeries:
    """Generating function of the F-family counts: q^s (1-q^k) / (q^s; q)_(L+1)."""
    base = pochhammer_inverse(params.s, params.L + 1, horizon)
    return _shifted_difference(base, params.s, params.s + params.k)


def series_abc(s: int, L: int, horizon: int):
    """The coefficient triple (a, b, c):

    a = (1-q) / (q^s; q)_(L+1)
    b = 1 / ((1-q^s)(q^(s+2); q)_(L-1))
    c = 1 / (q^(s+1); q)_L

    satisfying a[n] = b[n] - c[n-1] for n >= 1.
    """
    if s < 1:
        raise ParameterError("requires s >= 1 (got s=%d)" % s)
    if L < 3:
        raise ParameterError("requires L >= 3 (got L=%d)" % L)
    base = pochhammer_inverse(s, L + 1, horizon)
    a = _shifted_difference(base, 0, 1)
    b = TruncatedSeries.one(horizon)
    for m in [s] + list(range(s + 2, s + L + 1)):
        if m <= horizon:
            b = mul_geometric(b, m)
    c = pochhammer_inverse(s + 1, L, horizon)
    return a, b, c


def series_d(k: int, s: int, L: int, horizon: int) -> TruncatedSeries:
    """(1 - q^k) / (q^s; q)_(L+1): the width-k window sums of the a-series."""
    if k < 1:
        raise ParameterError("requires k >= 1 (got k=%d)" % k)
    if s < 1:
        raise ParameterError("requires s >= 1 (got s=%d)" % s)
    if L < 3:
        raise ParameterError("requires L >= 3 (got L=%d)" % L)
    base = pochhammer_inverse(s, L + 1, horizon)
    return _shifted_difference(base, 0, k)


def series_e(k: int, r: int, s: int, L: int, horizon: int) -> TruncatedSeries:
    """q^r (1 - q^k) / (q^s; q)_(L+1), i.e. the d-series shifted by r.

    Built from the base series directly, then checked coefficient-by-
    coefficient against the shift of series_d.
    """
    if r < 0:
        raise ParameterError("requires r >= 0 (got r=%d)" % r)
    base = pochhammer_inverse(s, L + 1, horizon)
    e = _shifted_difference(base, r, r + k)
    d = series_d(k, s, L, horizon)
    for n in range(r, horizon + 1):
        if e[n] != d[n - r]:
            raise AssertionError("shift identity violated at n=%d" % n)
    return e


def series_h_direct(L: int, s: int, r: int, k1: int, k2: int,
                    horizon: int) -> TruncatedSeries:
    """(q^r (1-q^k1) - (1-q^k2)) / (q^s; q)_(L+1) via numerator * inverse."""
    _validate_h(L, s, r, k1, k2)
    numerator = TruncatedSeries.from_terms(
        [(r, 1), (r + k1, -1), (0, -1), (k2, 1)], horizon
    )
    return numerator * pochhammer_inverse(s, L + 1, horizon)


def series_h_from_families(L: int, s: int, r: int, k1: int, k2: int,
                           horizon: int) -> TruncatedSeries:
    """Same series assembled as e(k1, r) - d(k2)."""
    _validate_h(L, s, r, k1, k2)
    return series_e(k1, r, s, L, horizon) - series_d(k2, s, L, horizon)


def series_h(L: int, s: int, r: int, k1: int, k2: int,
             horizon: int) -> TruncatedSeries:
    """The signed combination, built both ways and cross-checked exactly."""
    direct = series_h_direct(L, s, r, k1, k2, horizon)
    assembled = series_h_from_families(L, s, r, k1, k2, horizon)
    if direct != assembled:
        raise AssertionError("the two construction paths disagree")
    return direct


def _validate_h(L: int, s: int, r: int, k1: int, k2: int) -> None:
    if L < 3:
        raise ParameterError("requires L >= 3 (got L=%d)" % L)
    if s < 1:
        raise ParameterError("requires s >= 1 (got s=%d)" % s)
    if r < 0:
        raise ParameterError("requires r >= 0 (got r=%d)" % r)
    if not k1 > k2 >= 1:
        raise ParameterError("requires k1 > k2 >= 1 (got k1=%d, k2=%d)" % (k1, k2))


def positivity_scan(x: TruncatedSeries, start: int = 0) -> Optional[int]:
    """Largest index n in [start, horizon] with x[n] <= 0, or None.

    A None result only certifies positivity up to the horizon; reports must
    always state the horizon alongside it.
    """
    if not 0 <= start <= x.horizon:
        raise ValueError("start must lie in [0, horizon]")
    last = None
    for n in range(start, x.horizon + 1):
        if x[n] <= 0:
            last = n
    return last
