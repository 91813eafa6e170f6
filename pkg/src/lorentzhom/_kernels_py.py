"""Pure-Python reference kernels.

These are the fallback implementations for :mod:`lorentzhom._kernels`; both
modules expose the same functions with identical results.
"""
from math import gcd


def _primitive(row, start):
    g = 0
    for j in range(start, len(row)):
        v = row[j]
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        for j in range(start, len(row)):
            row[j] //= g
    return row


def rref_int(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(echelon, pivots)`` where ``echelon`` holds one primitive integer
    row per pivot, each row is zero in every other pivot column, and the pivot
    entry is positive.  The row space equals the row space of ``rows``.
    """
    work = [list(r) for r in rows if any(r)]
    pivots = []
    done = []
    for c in range(ncols):
        if not work:
            break
        best = -1
        best_abs = 0
        for i, r in enumerate(work):
            v = r[c]
            if v:
                a = v if v > 0 else -v
                if best < 0 or a < best_abs:
                    best, best_abs = i, a
                    if a == 1:
                        break
        if best < 0:
            continue
        piv = work.pop(best)
        if piv[c] < 0:
            for j in range(c, ncols):
                piv[j] = -piv[j]
        _primitive(piv, c)
        pc = piv[c]
        nz = [j for j in range(c + 1, ncols) if piv[j]]
        for group in (work, done):
            for r in group:
                f = r[c]
                if not f:
                    continue
                if pc != 1:
                    for j in range(ncols):
                        if r[j]:
                            r[j] *= pc
                r[c] = 0
                for j in nz:
                    r[j] -= f * piv[j]
                _primitive(r, 0)
        work = [r for r in work if any(r)]
        done.append(piv)
        pivots.append(c)
    return done, pivots
