"""Partitions with a bounded gap between largest and smallest parts.

Two families of partitions of n are studied throughout the package, both
parametrised by GapParams(L, s, k):

* the C-family: every part lies in the window [s+1, s+L] (k plays no role);
* the F-family: the smallest part is exactly s, the largest part is at most
  s+L, and no part equals k.

A Partition is stored as a part -> multiplicity map.  The canonical order
used by enumeration and unranking is descending lexicographic on the weakly
decreasing part sequence, e.g. for n=8 and parts in [2,4]:
(4,4), (4,2,2), (3,3,2), (2,2,2,2).

Text format: comma-separated ``value^multiplicity`` with values increasing,
``3^3,9^6,15^3``; the weight-0 partition renders as the empty string.  JSON
format: an object mapping decimal value strings to multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from ._backend import kernels
from .errors import ParameterError, RankRangeError
from .rng import SplitMix64

__all__ = [
    "Partition",
    "GapParams",
    "strong_gap_threshold",
    "injection_weight_threshold",
    "strong_quotient_threshold",
    "is_member_c",
    "is_member_f",
    "enumerate_c",
    "enumerate_f",
    "enumeration_count_c",
    "enumeration_count_f",
    "count_table_c",
    "count_table_f",
    "count_c",
    "count_f",
    "unrank_c",
    "sample_c",
]


class Partition:
    """An integer partition as an immutable part -> multiplicity map."""

    __slots__ = ("_items", "_map", "_weight")

    def __init__(self, parts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(parts, Mapping):
            pairs = parts.items()
        else:
            pairs = tuple(parts)
        merged: dict[int, int] = {}
        for value, mult in pairs:
            value = int(value)
            mult = int(mult)
            if value < 1:
                raise ValueError("part values must be >= 1, got %d" % value)
            if mult < 1:
                raise ValueError("multiplicities must be >= 1, got %d" % mult)
            merged[value] = merged.get(value, 0) + mult
        self._items = tuple(sorted(merged.items()))
        self._map = dict(self._items)
        self._weight = sum(v * m for v, m in self._items)

    @classmethod
    def _from_ascending_items(cls, items: tuple[tuple[int, int], ...]) -> "Partition":
        # Trusted constructor for hot paths: items must be ascending,
        # deduplicated, with positive values and multiplicities.
        self = object.__new__(cls)
        self._items = items
        self._map = dict(items)
        self._weight = sum(v * m for v, m in items)
        return self

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from individual part values, e.g. [3, 3, 9]."""
        counts: dict[int, int] = {}
        for v in parts:
            counts[v] = counts.get(v, 0) + 1
        return cls(counts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the ``value^mult`` comma list; '' is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        pairs = []
        for token in text.split(","):
            token = token.strip()
            if "^" in token:
                v, _, m = token.partition("^")
                pairs.append((int(v), int(m)))
            else:
                pairs.append((int(token), 1))
        return cls(pairs)

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, int]) -> "Partition":
        return cls((int(v), int(m)) for v, m in obj.items())

    @property
    def weight(self) -> int:
        """Sum of all parts with multiplicity."""
        return self._weight

    def items(self) -> tuple[tuple[int, int], ...]:
        """(value, multiplicity) pairs in increasing value order."""
        return self._items

    def multiplicity(self, value: int) -> int:
        return self._map.get(value, 0)

    def min_part(self) -> int:
        if not self._items:
            raise ValueError("empty partition has no parts")
        return self._items[0][0]

    def max_part(self) -> int:
        if not self._items:
            raise ValueError("empty partition has no parts")
        return self._items[-1][0]

    def to_sequence(self) -> tuple[int, ...]:
        """Weakly decreasing sequence of parts."""
        out = []
        for v, m in reversed(self._items):
            out.extend([v] * m)
        return tuple(out)

    def to_text(self) -> str:
        return ",".join("%d^%d" % (v, m) for v, m in self._items)

    def to_json_obj(self) -> dict[str, int]:
        return {str(v): m for v, m in self._items}

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return "Partition(%r)" % self.to_text()


# ---------------------------------------------------------------------------
# parameters and regime thresholds


def strong_gap_threshold(s: int) -> int:
    """Smallest window width L for which the explicit injections are defined."""
    return 2 * s**3 + 5 * s**2 + 1


def injection_weight_threshold(s: int) -> int:
    """Smallest weight n for which the full injection dispatch is defined."""
    return 2 * s**5 + 8 * s**4 + s**3 - 14 * s**2 + 3 * s + 1


def strong_quotient_threshold(s: int) -> int:
    """Lower bound on r = k div s implied by the strong regime."""
    return 2 * s**2 + 5 * s


@dataclass(frozen=True)
class GapParams:
    """The triple (L, s, k): window width, smallest part, forbidden part.

    Validity: L >= 3, s >= 1 and max(s+1, L) <= k <= s+L.  k is carried even
    for C-family operations (which ignore it) so one parameter object serves
    both families.
    """

    L: int
    s: int
    k: int

    def __post_init__(self):
        if self.s < 1:
            raise ParameterError("requires s >= 1 (got s=%d)" % self.s)
        if self.L < 3:
            raise ParameterError("requires L >= 3 (got L=%d)" % self.L)
        lo = max(self.s + 1, self.L)
        if not lo <= self.k <= self.s + self.L:
            raise ParameterError(
                "requires max(s+1, L) <= k <= s+L (got k=%d, bounds [%d, %d])"
                % (self.k, lo, self.s + self.L)
            )

    @property
    def r(self) -> int:
        """Quotient in k = r*s + t with 0 <= t <= s-1."""
        return self.k // self.s

    @property
    def t(self) -> int:
        """Remainder in k = r*s + t with 0 <= t <= s-1."""
        return self.k % self.s

    @property
    def strong_regime(self) -> bool:
        """True when L >= 2s^3 + 5s^2 + 1."""
        return self.L >= strong_gap_threshold(self.s)

    @property
    def max_part(self) -> int:
        return self.s + self.L


# ---------------------------------------------------------------------------
# membership


def is_member_c(p: Partition, params: GapParams) -> bool:
    """True iff every part of p lies in [s+1, s+L]; the empty partition counts."""
    lo, hi = params.s + 1, params.max_part
    return all(lo <= v <= hi for v, _ in p.items())


def is_member_f(p: Partition, params: GapParams) -> bool:
    """True iff p is nonempty, min part = s, max part <= s+L and no part is k."""
    if not p:
        return False
    return (
        p.min_part() == params.s
        and p.max_part() <= params.max_part
        and p.multiplicity(params.k) == 0
    )


# ---------------------------------------------------------------------------
# enumeration


def _descending_walk(left: int, cap: int, lo: int, forbidden: int, stack: list):
    if left == 0:
        yield stack
        return
    for p in range(min(cap, left), lo - 1, -1):
        if p == forbidden:
            continue
        stack.append(p)
        yield from _descending_walk(left - p, p, lo, forbidden, stack)
        stack.pop()


def _ascending_items(desc_parts, extra_low: int = 0) -> tuple[tuple[int, int], ...]:
    # desc_parts is a weakly decreasing list; extra_low, when nonzero, is one
    # additional part no larger than every element.
    items: list[list[int]] = []
    for v in reversed(desc_parts):
        if items and items[-1][0] == v:
            items[-1][1] += 1
        else:
            items.append([v, 1])
    if extra_low:
        if items and items[0][0] == extra_low:
            items[0][1] += 1
        else:
            items.insert(0, [extra_low, 1])
    return tuple((v, m) for v, m in items)


def enumerate_c(params: GapParams, n: int) -> Iterator[Partition]:
    """All partitions of n with parts in [s+1, s+L], descending-lex order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen():
        stack: list[int] = []
        for seq in _descending_walk(n, params.max_part, params.s + 1, 0, stack):
            yield Partition._from_ascending_items(_ascending_items(seq))

    return gen()


def enumerate_f(params: GapParams, n: int) -> Iterator[Partition]:
    """All partitions of n with min part s, max part <= s+L and no part k.

    Same descending-lex order as enumerate_c.  Generated by enumerating the
    partitions of n-s with parts in [s, s+L] minus k and re-attaching one
    copy of s, which preserves the order.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen():
        if n < params.s:
            return
        stack: list[int] = []
        for seq in _descending_walk(n - params.s, params.max_part, params.s,
                                    params.k, stack):
            yield Partition._from_ascending_items(
                _ascending_items(seq, extra_low=params.s)
            )

    return gen()


def enumeration_count_c(params: GapParams, n: int) -> int:
    """len(list(enumerate_c(...))) computed by the exhaustive tree walk."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return kernels.count_bounded(n, params.s + 1, params.max_part, 0)


def enumeration_count_f(params: GapParams, n: int) -> int:
    """len(list(enumerate_f(...))) computed by the exhaustive tree walk."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < params.s:
        return 0
    return kernels.count_bounded(n - params.s, params.s, params.max_part, params.k)


# ---------------------------------------------------------------------------
# counting tables (exact, arbitrary precision)


def count_table_c(params: GapParams, n_max: int) -> list[int]:
    """c[n] = |C-family at weight n| for n in 0..n_max, via the denumerant DP."""
    from .denumerants import c_counts

    return c_counts(params, n_max)


def count_table_f(params: GapParams, n_max: int) -> list[int]:
    """f[n] = |F-family at weight n| for n in 0..n_max, via the denumerant DP."""
    from .denumerants import f_counts

    return f_counts(params, n_max)


@lru_cache(maxsize=32)
def _bounded_table(lo: int, hi: int, forbidden: int, n: int):
    # Read-mostly cache; table objects are never mutated after construction,
    # so concurrent lookups always observe identical values.
    return kernels.bounded_count_table(n, lo, hi, forbidden)


def count_c(params: GapParams, n: int) -> int:
    """|C-family at weight n|, from the same table unranking walks."""
    if n < 0:
        raise ValueError("n must be >= 0")
    table = _bounded_table(params.s + 1, params.max_part, 0, n)
    return table.entry(n, params.max_part)


def count_f(params: GapParams, n: int) -> int:
    """|F-family at weight n|."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < params.s:
        return 0
    table = _bounded_table(params.s, params.max_part, params.k, n - params.s)
    return table.entry(n - params.s, params.max_part)


# ---------------------------------------------------------------------------
# unranking and sampling


def unrank_c(params: GapParams, n: int, index: int) -> Partition:
    """The index-th partition of enumerate_c(params, n), zero-based.

    Bijective from [0, count_c(n)) onto the canonical enumeration order.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    hi = params.max_part
    table = _bounded_table(params.s + 1, hi, 0, n)
    total = table.entry(n, hi)
    if not 0 <= index < total:
        raise RankRangeError(
            "rank %d outside [0, %d) for n=%d" % (index, total, n)
        )
    pairs = kernels.unrank_with_table(table, n, params.s + 1, hi, 0, index)
    return Partition._from_ascending_items(tuple(reversed([tuple(p) for p in pairs])))


def sample_c(params: GapParams, n: int, seed: int, count: int) -> list[Partition]:
    """`count` independent uniform draws from the C-family at weight n.

    Sampling draws indices from the seeded SplitMix64 stream (see rng module)
    and unranks each, so results are identical across platforms and runs.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    if count == 0:
        return []
    total = count_c(params, n)
    if total == 0:
        raise RankRangeError("cannot sample: no partitions of n=%d" % n)
    rng = SplitMix64(seed)
    return [unrank_c(params, n, rng.randbelow(total)) for _ in range(count)]
