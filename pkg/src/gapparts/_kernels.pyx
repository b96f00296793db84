# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Each entry point first runs a C int64 fast path with overflow checks and
transparently redoes the work in Python-object arithmetic when a value
would not fit, so results are always exact regardless of magnitude.  The
contract matches gapparts._kernels_py exactly.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t
from libc.string cimport memset

cdef extern from *:
    """
    #include <stdint.h>
    static inline int gp_add_ovf(int64_t a, int64_t b, int64_t *r)
    { return __builtin_add_overflow(a, b, r); }
    static inline int gp_mul_ovf(int64_t a, int64_t b, int64_t *r)
    { return __builtin_mul_overflow(a, b, r); }
    """
    int gp_add_ovf(int64_t a, int64_t b, int64_t *r) nogil
    int gp_mul_ovf(int64_t a, int64_t b, int64_t *r) nogil


# ---------------------------------------------------------------------------
# denumerant tables

cdef list _denum_i64(tuple denoms, Py_ssize_t n_max):
    cdef int64_t *p = <int64_t *> PyMem_Malloc((n_max + 1) * sizeof(int64_t))
    if p == NULL:
        raise MemoryError
    cdef Py_ssize_t m, n
    cdef int64_t r
    try:
        memset(p, 0, (n_max + 1) * sizeof(int64_t))
        p[0] = 1
        for m_obj in denoms:
            if m_obj > n_max:
                continue
            m = m_obj
            for n in range(m, n_max + 1):
                if gp_add_ovf(p[n], p[n - m], &r):
                    raise OverflowError
                p[n] = r
        return [p[n] for n in range(n_max + 1)]
    finally:
        PyMem_Free(p)


cdef list _denum_obj(tuple denoms, Py_ssize_t n_max):
    cdef list p = [0] * (n_max + 1)
    cdef Py_ssize_t m, n
    p[0] = 1
    for m_obj in denoms:
        if m_obj > n_max:
            continue
        m = m_obj
        for n in range(m, n_max + 1):
            p[n] = p[n] + p[n - m]
    return p


def denumerant_table(denoms, n_max):
    """p[n] = number of multisets over `denoms` with sum n, for n in 0..n_max."""
    cdef tuple d = tuple(denoms)
    try:
        return _denum_i64(d, n_max)
    except OverflowError:
        return _denum_obj(d, n_max)


# ---------------------------------------------------------------------------
# series helpers

cdef list _geom_i64(list coeffs, Py_ssize_t m):
    cdef Py_ssize_t size = len(coeffs)
    cdef int64_t *buf = <int64_t *> PyMem_Malloc(size * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError
    cdef Py_ssize_t n
    cdef int64_t r
    try:
        for n in range(size):
            buf[n] = coeffs[n]  # raises OverflowError on huge inputs
        for n in range(m, size):
            if gp_add_ovf(buf[n], buf[n - m], &r):
                raise OverflowError
            buf[n] = r
        return [buf[n] for n in range(size)]
    finally:
        PyMem_Free(buf)


def geometric_divide(coeffs, m):
    """Coefficients of x / (1 - q^m) truncated to the input horizon."""
    cdef list src = list(coeffs)
    cdef Py_ssize_t step = m, n
    try:
        return _geom_i64(src, step)
    except OverflowError:
        pass
    for n in range(step, len(src)):
        src[n] = src[n] + src[n - step]
    return src


cdef list _cauchy_i64(list x, list y, Py_ssize_t n_out):
    cdef Py_ssize_t nx = len(x), ny = len(y)
    cdef int64_t *a = NULL
    cdef int64_t *b = NULL
    cdef int64_t *out = NULL
    cdef Py_ssize_t i, j, jmax
    cdef int64_t prod, acc, xi
    try:
        a = <int64_t *> PyMem_Malloc(nx * sizeof(int64_t))
        b = <int64_t *> PyMem_Malloc(ny * sizeof(int64_t))
        out = <int64_t *> PyMem_Malloc((n_out + 1) * sizeof(int64_t))
        if a == NULL or b == NULL or out == NULL:
            raise MemoryError
        for i in range(nx):
            a[i] = x[i]
        for j in range(ny):
            b[j] = y[j]
        memset(out, 0, (n_out + 1) * sizeof(int64_t))
        for i in range(nx):
            if i > n_out:
                break
            xi = a[i]
            if xi == 0:
                continue
            jmax = n_out - i
            if jmax > ny - 1:
                jmax = ny - 1
            for j in range(jmax + 1):
                if gp_mul_ovf(xi, b[j], &prod):
                    raise OverflowError
                if gp_add_ovf(out[i + j], prod, &acc):
                    raise OverflowError
                out[i + j] = acc
        return [out[i] for i in range(n_out + 1)]
    finally:
        PyMem_Free(a)
        PyMem_Free(b)
        PyMem_Free(out)


def cauchy_product(x, y, n_out):
    """Dense product of two coefficient lists, truncated at degree n_out."""
    cdef list lx = list(x), ly = list(y)
    cdef Py_ssize_t limit = n_out, i, j, jmax
    try:
        return _cauchy_i64(lx, ly, limit)
    except OverflowError:
        pass
    out = [0] * (limit + 1)
    for i in range(min(len(lx), limit + 1)):
        xi = lx[i]
        if xi == 0:
            continue
        jmax = min(len(ly) - 1, limit - i)
        for j in range(jmax + 1):
            out[i + j] = out[i + j] + xi * ly[j]
    return out


# ---------------------------------------------------------------------------
# exhaustive partition walk

cdef int64_t _walk_i64(Py_ssize_t left, Py_ssize_t cap, Py_ssize_t lo,
                       Py_ssize_t forbidden) except -1:
    cdef int64_t total = 0, sub
    cdef Py_ssize_t p = cap if cap < left else left
    while p >= lo:
        if p != forbidden:
            if p == left:
                sub = 1
            else:
                sub = _walk_i64(left - p, p, lo, forbidden)
            if gp_add_ovf(total, sub, &total):
                raise OverflowError
        p -= 1
    return total


cdef object _walk_obj(Py_ssize_t left, Py_ssize_t cap, Py_ssize_t lo,
                      Py_ssize_t forbidden):
    cdef object total = 0
    cdef Py_ssize_t p = cap if cap < left else left
    while p >= lo:
        if p != forbidden:
            if p == left:
                total = total + 1
            else:
                total = total + _walk_obj(left - p, p, lo, forbidden)
        p -= 1
    return total


def count_bounded(n, lo, hi, forbidden=0):
    """Number of partitions of n with parts in [lo, hi], skipping `forbidden`.

    Counted by exhaustively walking the enumeration tree (largest part
    first); deliberately not a DP, so it can serve as an independent check
    against table-based counts.
    """
    if n == 0:
        return 1
    try:
        return _walk_i64(n, hi, lo, forbidden)
    except OverflowError:
        return _walk_obj(n, hi, lo, forbidden)


# ---------------------------------------------------------------------------
# count tables and unranking

cdef class CountTable:
    """Table entry(m, p) = partitions of m with parts in [lo, min(p, hi)]."""

    cdef int64_t *data          # NULL when the object fallback is in use
    cdef list rows              # list-of-lists fallback, else None
    cdef Py_ssize_t nmax, pmax

    def __cinit__(self):
        self.data = NULL
        self.rows = None

    def __dealloc__(self):
        if self.data != NULL:
            PyMem_Free(self.data)

    def entry(self, Py_ssize_t m, Py_ssize_t p):
        if m < 0 or m > self.nmax or p < 0 or p > self.pmax:
            raise IndexError("count table index out of range")
        if self.data != NULL:
            return self.data[m * (self.pmax + 1) + p]
        return self.rows[m][p]


cdef int _fill_table_i64(CountTable t, Py_ssize_t n, Py_ssize_t lo,
                         Py_ssize_t hi, Py_ssize_t forbidden) except -1:
    cdef Py_ssize_t width = hi + 1
    cdef int64_t *d = <int64_t *> PyMem_Malloc((n + 1) * width * sizeof(int64_t))
    if d == NULL:
        raise MemoryError
    cdef Py_ssize_t m, p
    cdef int64_t c
    for p in range(width):
        d[p] = 1
    for m in range(1, n + 1):
        memset(d + m * width, 0, lo * sizeof(int64_t))
        for p in range(lo, width):
            c = d[m * width + p - 1]
            if p != forbidden and p <= m:
                if gp_add_ovf(c, d[(m - p) * width + p], &c):
                    PyMem_Free(d)
                    raise OverflowError
            d[m * width + p] = c
    t.data = d
    return 0


cdef list _table_rows_obj(Py_ssize_t n, Py_ssize_t lo, Py_ssize_t hi,
                          Py_ssize_t forbidden):
    cdef list rows = [[1] * (hi + 1)]
    cdef list row, prev
    cdef Py_ssize_t m, p
    for m in range(1, n + 1):
        row = [0] * (hi + 1)
        for p in range(lo, hi + 1):
            c = row[p - 1]
            if p != forbidden and p <= m:
                c = c + (<list> rows[m - p])[p]
            row[p] = c
        rows.append(row)
    return rows


def bounded_count_table(n, lo, hi, forbidden=0):
    cdef CountTable t = CountTable()
    t.nmax = n
    t.pmax = hi
    try:
        _fill_table_i64(t, n, lo, hi, forbidden)
    except OverflowError:
        t.rows = _table_rows_obj(n, lo, hi, forbidden)
    return t


cdef list _unrank_i64(CountTable t, Py_ssize_t n, Py_ssize_t lo,
                      Py_ssize_t forbidden, int64_t index):
    cdef int64_t *d = t.data
    cdef Py_ssize_t width = t.pmax + 1
    cdef Py_ssize_t remaining = n, cap = t.pmax, p, chosen
    cdef int64_t c
    cdef list pairs = []
    while remaining > 0:
        chosen = 0
        p = cap if cap < remaining else remaining
        while p >= lo:
            if p != forbidden:
                c = d[(remaining - p) * width + p]
                if index < c:
                    chosen = p
                    break
                index -= c
            p -= 1
        if chosen == 0:
            raise IndexError("count table inconsistent with constraints")
        if pairs and (<tuple> pairs[len(pairs) - 1])[0] == chosen:
            pairs[len(pairs) - 1] = (chosen, (<tuple> pairs[len(pairs) - 1])[1] + 1)
        else:
            pairs.append((chosen, 1))
        remaining -= chosen
        cap = chosen
    return pairs


def unrank_with_table(CountTable table, n, lo, hi, forbidden, index):
    """Partition of n at position `index` in descending-lex order.

    Returns run-length pairs (part, multiplicity) with parts descending.
    `table` must come from bounded_count_table with the same constraints.
    """
    total = table.entry(n, hi)
    if index < 0 or index >= total:
        raise IndexError("rank %d outside [0, %d)" % (index, total))
    if table.data != NULL:
        return _unrank_i64(table, n, lo, forbidden, index)

    rows = table.rows
    cdef list pairs = []
    cdef Py_ssize_t last
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
        last = len(pairs) - 1
        if pairs and (<tuple> pairs[last])[0] == chosen:
            pairs[last] = (chosen, (<tuple> pairs[last])[1] + 1)
        else:
            pairs.append((chosen, 1))
        remaining -= chosen
        cap = chosen
    return pairs
