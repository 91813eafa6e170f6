"""Exact linear and bilinear algebra over the rationals.

Vectors are plain lists of Fractions; :class:`Mat` is used at the public
boundary.  All elimination goes through the kernel picked in ``_backend``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from lorentzhom.exact._backend import rref_int
from lorentzhom.exact.matrix import Mat, as_rat

_ZERO = Fraction(0)


# integer scaling ---------------------------------------------------------

def to_int_row(row: Sequence) -> list[int]:
    """A primitive integer multiple of ``row`` (zero rows stay zero)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    ints = [int(x * den) if den != 1 else int(x) for x in row]
    g = 0
    for v in ints:
        if v:
            g = gcd(g, v)
            if g == 1:
                return ints
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def echelon(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Canonical reduced echelon form: primitive integer rows, positive pivots."""
    return rref_int([to_int_row(r) for r in rows], ncols)


def rank_of(rows: Iterable[Sequence], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows: Iterable[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : r . x = 0 for every row r}``, one vector per free column."""
    ech, pivots = echelon(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [_ZERO] * ncols
        v[f] = Fraction(1)
        for r, p in zip(ech, pivots):
            if r[f]:
                v[p] = Fraction(-r[f], r[p])
        basis.append(v)
    return basis


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v) if a and b), _ZERO)


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [dot(r, v) for r in rows]


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence]) -> list[Fraction]:
    n = len(vectors[0]) if vectors else 0
    out = [_ZERO] * n
    for c, vec in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(vec):
                if x:
                    out[j] += c * x
    return out


# Mat-level operations ----------------------------------------------------

def rank(m: Mat) -> int:
    return rank_of(m.tolist(), m.cols)


def kernel(m: Mat) -> list[Mat]:
    """Column vectors forming a basis of the null space of ``m``."""
    return [Mat.column(v) for v in nullspace(m.tolist(), m.cols)]


def solve_linear(a: Mat, b: Mat) -> Mat | None:
    """A solution of ``a @ x = b`` for a column ``b``, or None if inconsistent."""
    if b.cols != 1 or a.rows != b.rows:
        raise ValueError("solve_linear needs a column right-hand side with a.rows rows")
    n = a.cols
    aug = [list(a.row(i)) + [b[i, 0]] for i in range(a.rows)]
    ech, pivots = echelon(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [_ZERO] * n
    for r, p in zip(ech, pivots):
        x[p] = Fraction(r[n], r[p])
    return Mat.column(x)


def inverse(m: Mat) -> Mat:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.row(i)) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    ech, pivots = echelon(aug, 2 * n)
    if pivots[:n] != list(range(n)) or (len(pivots) > n):
        raise ZeroDivisionError("matrix is singular")
    return Mat([[Fraction(r[n + j], r[i]) for j in range(n)] for i, r in enumerate(ech)])


def determinant(m: Mat) -> Fraction:
    """Bareiss fraction-free elimination on an integer rescaling of ``m``."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for i in range(n):
        row = m.row(i)
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        scale /= den
        a.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] * scale


# subspaces ---------------------------------------------------------------

class Subspace:
    """A subspace of Q^n stored by its canonical reduced echelon basis.

    Two subspaces are equal exactly when their echelon data coincide.
    """

    __slots__ = ("n", "_rows", "_pivots")

    def __init__(self, vectors: Iterable[Sequence], n: int):
        self.n = n
        self._rows, self._pivots = echelon(vectors, n)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls([], n)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def basis(self) -> list[list[Fraction]]:
        return [[Fraction(x) for x in r] for r in self._rows]

    def contains(self, v: Sequence) -> bool:
        w = list(v)
        for r, p in zip(self._rows, self._pivots):
            c = w[p]
            if c:
                f = Fraction(c) / r[p]
                for j, x in enumerate(r):
                    if x:
                        w[j] -= f * x
        return not any(w)

    def contains_all(self, vectors: Iterable[Sequence]) -> bool:
        return all(self.contains(v) for v in vectors)

    def issubspace(self, other: Subspace) -> bool:
        return other.contains_all(self._rows)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self._rows + other._rows, self.n)

    def __and__(self, other: Subspace) -> Subspace:
        a, b = self._rows, other._rows
        if not a or not b:
            return Subspace.zero(self.n)
        cols = a + [[-x for x in r] for r in b]
        system = [[c[i] for c in cols] for i in range(self.n)]
        vecs = [lin_comb(k[:len(a)], a) for k in nullspace(system, len(cols))]
        return Subspace(vecs, self.n)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self._pivots == other._pivots and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, tuple(map(tuple, self._rows))))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"


class SpanSolver:
    """Expresses vectors in terms of fixed independent ``vectors``."""

    def __init__(self, vectors: Sequence[Sequence], n: int):
        k = len(vectors)
        self.n, self.k = n, k
        aug = [list(v) + [int(i == j) for j in range(k)] for i, v in enumerate(vectors)]
        rows, pivots = echelon(aug, n + k)
        if any(p >= n for p in pivots):
            raise ValueError("vectors are linearly dependent")
        self._rows = rows
        self._pivots = pivots

    def express(self, v: Sequence) -> list[Fraction] | None:
        """Coefficients c with ``sum c_i vectors_i == v``, or None outside the span."""
        n = self.n
        w = [Fraction(x) for x in v] + [_ZERO] * self.k
        for r, p in zip(self._rows, self._pivots):
            c = w[p]
            if c:
                f = c / r[p]
                for j, x in enumerate(r):
                    if x:
                        w[j] -= f * x
        if any(w[:n]):
            return None
        # w[n:] now holds -(coefficients) of the combination reproducing v
        return [-x for x in w[n:]]


def image(rows: Sequence[Sequence], n: int) -> Subspace:
    """Column space of the matrix with the given rows (``n`` rows of length k)."""
    k = len(rows[0]) if rows else 0
    return Subspace(([rows[i][j] for i in range(n)] for j in range(k)), n)


# bilinear forms ----------------------------------------------------------

class SignatureTriple(NamedTuple):
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero

    @property
    def is_minkowski(self) -> bool:
        """Nondegenerate with exactly one direction of one sign, dim >= 2."""
        return self.dim >= 2 and self.n_zero == 0 and 1 in (self.n_pos, self.n_neg)

    def __str__(self):
        return f"({self.n_pos},{self.n_neg},{self.n_zero})"


def _require_symmetric(s: Mat):
    if not s.is_symmetric():
        raise ValueError("expected a symmetric matrix")


def congruent_diagonalize(s: Mat) -> tuple[Mat, Mat]:
    """Return ``(d, p)`` with ``p.T @ s @ p == d`` diagonal and ``p`` invertible."""
    _require_symmetric(s)
    n = s.rows
    a = s.tolist()
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_to(i, j):
        # row_i += row_j, col_i += col_j
        for c in range(n):
            a[i][c] += a[j][c]
        for r in range(n):
            a[r][i] += a[r][j]
        for r in range(n):
            p[r][i] += p[r][j]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in p:
            r[i], r[j] = r[j], r[i]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j]), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j]), None)
                if j is None:
                    continue
                add_to(k, j)
        akk = a[k][k]
        for j in range(k + 1, n):
            f = a[j][k]
            if not f:
                continue
            f = f / akk
            rk = a[k]
            rj = a[j]
            for c in range(k, n):
                if rk[c]:
                    rj[c] -= f * rk[c]
            for r in range(k, n):
                if a[r][k]:
                    a[r][j] -= f * a[r][k]
            for r in range(n):
                if p[r][k]:
                    p[r][j] -= f * p[r][k]
    return Mat.diag(a[i][i] for i in range(n)), Mat(p)


def signature(s: Mat) -> SignatureTriple:
    d, _ = congruent_diagonalize(s)
    pos = neg = 0
    for i in range(d.rows):
        x = d[i, i]
        if x > 0:
            pos += 1
        elif x < 0:
            neg += 1
    return SignatureTriple(pos, neg, d.rows - pos - neg)


def sym_basis(m: int) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` with ``i <= j`` ordering symmetric coordinates."""
    return [(i, j) for i in range(m) for j in range(i, m)]


def sym_from_coords(coords: Sequence, m: int) -> Mat:
    a = [[_ZERO] * m for _ in range(m)]
    for (i, j), c in zip(sym_basis(m), coords):
        c = as_rat(c)
        a[i][j] = c
        a[j][i] = c
    return Mat(a)
