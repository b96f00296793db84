"""Pure-Python kernels.

Same contract as the compiled module `gapparts._kernels`; used when the
extension is unavailable or when GAPPARTS_PURE_PYTHON is set.  Everything is
exact Python-int arithmetic, just slower.
"""

from __future__ import annotations


def denumerant_table(denoms, n_max):
    """p[n] = number of multisets over `denoms` with sum n, for n in 0..n_max."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for m in denoms:
        if m > n_max:
            continue
        for n in range(m, n_max + 1):
            p[n] += p[n - m]
    return p


def geometric_divide(coeffs, m):
    """Coefficients of x / (1 - q^m) truncated to the input horizon."""
    out = list(coeffs)
    for n in range(m, len(out)):
        out[n] += out[n - m]
    return out


def cauchy_product(x, y, n_out):
    """Dense product of two coefficient lists, truncated at degree n_out."""
    out = [0] * (n_out + 1)
    for i in range(min(len(x), n_out + 1)):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(min(len(y), n_out + 1 - i)):
            out[i + j] += xi * y[j]
    return out


def count_bounded(n, lo, hi, forbidden=0):
    """Number of partitions of n with parts in [lo, hi], skipping `forbidden`.

    Counted by exhaustively walking the enumeration tree (largest part
    first); deliberately not a DP, so it can serve as an independent check
    against table-based counts.
    """
    if n == 0:
        return 1

    def walk(left, cap):
        total = 0
        for p in range(min(cap, left), lo - 1, -1):
            if p == forbidden:
                continue
            if p == left:
                total += 1
            else:
                total += walk(left - p, p)
        return total

    return walk(n, hi)


class CountTable:
    """Table entry(m, p) = partitions of m with parts in [lo, min(p, hi)]."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = rows

    def entry(self, m, p):
        return self.rows[m][p]


def bounded_count_table(n, lo, hi, forbidden=0):
    rows = [[1] * (hi + 1)]
    for m in range(1, n + 1):
        row = [0] * (hi + 1)
        for p in range(lo, hi + 1):
            c = row[p - 1]
            if p != forbidden and p <= m:
                c += rows[m - p][p]
            row[p] = c
        rows.append(row)
    return CountTable(rows)


def unrank_with_table(table, n, lo, hi, forbidden, index):
    """Partition of n at position `index` in descending-lex order.

    Returns run-length pairs (part, multiplicity) with parts descending.
    `table` must come from bounded_count_table with the same constraints.
    """
    rows = table.rows
    if index < 0 or index >= rows[n][hi]:
        raise IndexError("rank %d outside [0, %d)" % (index, rows[n][hi]))
    pairs = []
    remaining = n
    cap = hi
    while remaining > 0:
        chosen = 0
        for p in range(min(cap, remaining), lo - 1, -1):
            if p == forbidden:
                continue
            c = rows[remaining - p][p]
            if index < c:
                chosen = p
                break
            index -= c
        if chosen == 0:
            raise IndexError("count table inconsistent with constraints")
        if pairs and pairs[-1][0] == chosen:
            pairs[-1][1] += 1
        else:
            pairs.append([chosen, 1])
        remaining -= chosen
        cap = chosen
    return [(p, m) for p, m in pairs]
