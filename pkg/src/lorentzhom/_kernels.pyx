# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel.

Runs fraction-free Gauss-Jordan elimination on a dense ``int64`` buffer with
checked arithmetic.  If any intermediate value would overflow, the work is
redone on arbitrary-precision integers by the pure-Python kernel, so results
are identical to :func:`lorentzhom._kernels_py.rref_int` in every case.
"""
from libc.stdlib cimport malloc, free

from lorentzhom import _kernels_py

ctypedef long long i64


cdef extern from *:
    """
    static inline int lh_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int lh_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int lh_mul_ovf(i64 a, i64 b, i64 *r) nogil
    int lh_sub_ovf(i64 a, i64 b, i64 *r) nogil


# Keeps every stored value well inside int64 so negation and gcd stay safe.
cdef i64 _LIMIT = 1LL << 62


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef void _make_primitive(i64 *row, Py_ssize_t start, Py_ssize_t n) nogil:
    cdef i64 g = 0
    cdef Py_ssize_t j
    for j in range(start, n):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(start, n):
            row[j] //= g


cdef int _eliminate(i64 *buf, Py_ssize_t nrows, Py_ssize_t ncols,
                    Py_ssize_t *order, Py_ssize_t *pivots,
                    Py_ssize_t *rank_out) nogil:
    """Return 0 on success, 1 on overflow.  ``order`` lists row indices; the
    first ``rank`` entries are the pivot rows in pivot order."""
    cdef Py_ssize_t rank = 0, c, i, j, best, tmp
    cdef i64 a, best_abs, pc, f, t1, t2
    cdef i64 *piv
    cdef i64 *r
    for c in range(ncols):
        if rank == nrows:
            break
        best = -1
        best_abs = 0
        for i in range(rank, nrows):
            a = buf[order[i] * ncols + c]
            if a:
                if a < 0:
                    a = -a
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        tmp = order[rank]
        order[rank] = order[best]
        order[best] = tmp
        piv = buf + order[rank] * ncols
        if piv[c] < 0:
            for j in range(c, ncols):
                piv[j] = -piv[j]
        _make_primitive(piv, c, ncols)
        pc = piv[c]
        for i in range(nrows):
            if i == rank:
                continue
            r = buf + order[i] * ncols
            f = r[c]
            if not f:
                continue
            if pc != 1:
                for j in range(ncols):
                    if r[j]:
                        if lh_mul_ovf(r[j], pc, &t1) or t1 >= _LIMIT or t1 <= -_LIMIT:
                            return 1
                        r[j] = t1
            r[c] = 0
            for j in range(c + 1, ncols):
                if piv[j]:
                    if lh_mul_ovf(f, piv[j], &t1):
                        return 1
                    if lh_sub_ovf(r[j], t1, &t2) or t2 >= _LIMIT or t2 <= -_LIMIT:
                        return 1
                    r[j] = t2
            _make_primitive(r, 0, ncols)
        pivots[rank] = c
        rank += 1
    rank_out[0] = rank
    return 0


def rref_int(rows, Py_ssize_t ncols):
    """Same contract as :func:`lorentzhom._kernels_py.rref_int`."""
    rows = [r for r in rows if any(r)]
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [], []
    cdef Py_ssize_t i, j, rank = 0
    for r in rows:
        for v in r:
            if v >= _LIMIT or v <= -_LIMIT:
                return _kernels_py.rref_int(rows, ncols)
    cdef i64 *buf = <i64 *> malloc(nrows * ncols * sizeof(i64))
    cdef Py_ssize_t *order = <Py_ssize_t *> malloc(nrows * sizeof(Py_ssize_t))
    cdef Py_ssize_t *pivots = <Py_ssize_t *> malloc(min(nrows, ncols) * sizeof(Py_ssize_t))
    cdef int status
    if buf == NULL or order == NULL or pivots == NULL:
        free(buf)
        free(order)
        free(pivots)
        raise MemoryError()
    try:
        for i in range(nrows):
            r = rows[i]
            order[i] = i
            for j in range(ncols):
                buf[i * ncols + j] = r[j]
        with nogil:
            status = _eliminate(buf, nrows, ncols, order, pivots, &rank)
        if status:
            return _kernels_py.rref_int(rows, ncols)
        out = []
        for i in range(rank):
            out.append([buf[order[i] * ncols + j] for j in range(ncols)])
        # Pivot rows in column order; the Python kernel emits the same order.
        return out, [pivots[i] for i in range(rank)]
    finally:
        free(buf)
        free(order)
        free(pivots)
