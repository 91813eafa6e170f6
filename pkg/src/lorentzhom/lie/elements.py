"""Element classification, sl2-triples and Weyl reflections."""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Sequence

from lorentzhom.exact import poly
from lorentzhom.exact.linalg import Subspace, mat_vec, nullspace
from lorentzhom.exact.matrix import Mat
from lorentzhom.lie.algebra import LieAlg

_ZERO = Fraction(0)


class ElementClass(str, Enum):
    HYPERBOLIC = "hyperbolic"
    NILPOTENT = "nilpotent"
    ELLIPTIC = "elliptic"
    MIXED = "mixed"
    ZERO = "zero"


def _local_minpoly(sparse, v):
    """Monic generator of ``{f : f(A) v = 0}`` and the Krylov vectors of v."""
    krylov = [list(v)]
    n = len(v)
    span = Subspace([v], n)
    while True:
        last = krylov[-1]
        nxt = [sum(x * last[j] for j, x in r) for r in sparse]
        if span.contains(nxt):
            k = len(krylov)
            # nxt = sum c_i A^i v  gives  t^k - sum c_i t^i
            system = [[krylov[t][r] for t in range(k)] + [-nxt[r]] for r in range(n)]
            for sol in nullspace(system, k + 1):
                if sol[k]:
                    return [-x / sol[k] for x in sol[:k]] + [Fraction(1)], krylov
        krylov.append(nxt)
        span = span + Subspace([nxt], n)


def minimal_polynomial(rows: Sequence[Sequence]) -> list[Fraction]:
    """Minimal polynomial of a square matrix given by rows (lcm of Krylov minpolys)."""
    n = len(rows)
    # work with the integer matrix B = D A and rescale at the end
    den = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
    sparse = [[(j, int(x * den)) for j, x in enumerate(r) if x] for r in rows]
    result = [Fraction(1)]
    covered = Subspace.zero(n)
    for i in range(n):
        e = [int(i == j) for j in range(n)]
        if covered.contains(e):
            # e lies in an A-invariant subspace already annihilated by result
            continue
        loc, krylov = _local_minpoly(sparse, e)
        g = poly.gcd_poly(result, loc)
        result = poly.monic(poly.mul(result, poly.divmod_poly(loc, g)[0]))
        covered = covered + Subspace(krylov, n)
    deg = poly.degree(result)
    return [c * Fraction(den) ** i / Fraction(den) ** deg for i, c in enumerate(result)]


def classify_minpoly(m: Sequence[Fraction]) -> ElementClass:
    m = poly.trim(m)
    deg = poly.degree(m)
    if deg <= 0:
        return ElementClass.ZERO
    if all(c == 0 for c in m[:-1]):
        return ElementClass.NILPOTENT
    if not poly.is_squarefree(m):
        return ElementClass.MIXED
    if poly.all_roots_real(m):
        return ElementClass.HYPERBOLIC
    # strip the factor t, then all remaining roots must be +-i*b with b != 0
    e = 0
    while m[e] == 0:
        e += 1
    rest = m[e:]
    if any(c for c in rest[1::2]):
        return ElementClass.MIXED
    h = rest[0::2]  # rest(t) = h(t^2)
    # roots of h must be real and strictly negative
    if poly.count_real_roots(h, None, 0) == poly.degree(h) and poly.evaluate(h, 0) != 0:
        return ElementClass.ELLIPTIC
    return ElementClass.MIXED


def classify_element(g: LieAlg, x: Mat) -> ElementClass:
    """Tag ``x`` by the minimal polynomial of ``ad x``."""
    u = g.coords(x)
    if not any(u):
        return ElementClass.ZERO
    return classify_minpoly(minimal_polynomial(g.ad(u)))


def classify_coords(g: LieAlg, u: Sequence) -> ElementClass:
    if not any(u):
        return ElementClass.ZERO
    return classify_minpoly(minimal_polynomial(g.ad(u)))


def is_ad_nilpotent(g: LieAlg, u: Sequence) -> bool:
    vecs = [[Fraction(int(i == j)) for j in range(g.dim)] for i in range(g.dim)]
    for _ in range(g.dim + 1):
        vecs = [w for w in (g.bracket_coords(u, v) for v in vecs) if any(w)]
        if not vecs:
            return True
        vecs = Subspace(vecs, g.dim).basis()
    return False


class JacobsonMorozovError(ValueError):
    pass


def sl2_triple(g: LieAlg, e: Sequence) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    """Coordinates ``(h, e, f)`` with ``[h,e]=2e, [h,f]=-2f, [e,f]=h``."""
    d = g.dim
    if not any(e):
        raise JacobsonMorozovError("the zero element has no sl2-triple")
    if not is_ad_nilpotent(g, e):
        raise JacobsonMorozovError("element is not nilpotent")
    ad_e = g.ad(e)
    # h = [e, z] with [h, e] = 2e  <=>  -ad_e(ad_e z) = 2e
    ad_e2 = [[-sum((a * b for a, b in zip(ad_e[i], col) if a and b), _ZERO)
              for col in zip(*ad_e)] for i in range(d)]
    z = _solve(ad_e2, [2 * c for c in e], d)
    if z is None:
        raise JacobsonMorozovError("no h in [e, g] with [h, e] = 2e")
    h = mat_vec(ad_e, z)
    ad_h = g.ad(h)
    # f:  [e, f] = h  and  [h, f] = -2f
    rows = [list(r) for r in ad_e]
    rhs = list(h)
    for i in range(d):
        r = list(ad_h[i])
        r[i] += 2
        rows.append(r)
        rhs.append(_ZERO)
    f = _solve(rows, rhs, d)
    if f is None:
        raise JacobsonMorozovError("no f completing the triple")
    return h, list(e), f


def _solve(rows, rhs, n):
    aug = [list(r) + [-b] for r, b in zip(rows, rhs)]
    for sol in nullspace(aug, n + 1):
        if sol[n]:
            return [x / sol[n] for x in sol[:n]]
    return None


def jacobson_morozov(g: LieAlg, u: Mat) -> Mat:
    """An element ``v`` with ``[v, u]`` hyperbolic and ``[[v, u], u] = 2u``."""
    e = g.coords(u)
    _, _, f = sl2_triple(g, e)
    return g.element([-x for x in f])


# Weyl reflections -------------------------------------------------------------

def weyl_reflection(g: LieAlg, which: str) -> Mat:
    """Signed permutation in SO(2,n) normalizing the standard split subspace.

    ``"alpha"`` swaps the two split planes (acting on roots by swapping
    coordinates); ``"beta"`` negates the second split direction, with a second
    sign flip on coordinate 5 to keep determinant one.
    """
    if g.p != 2 or g.q < 3:
        raise ValueError(f"Weyl reflections are provided for so(2,n>=3), not {g.name}")
    n = g.n
    perm = list(range(n))
    signs = [1] * n
    if which == "alpha":
        perm[0], perm[1] = 1, 0
        perm[2], perm[3] = 3, 2
    elif which == "beta":
        signs[3] = -1
        signs[4] = -1
    else:
        raise ValueError(f"unknown reflection {which!r}; use 'alpha' or 'beta'")
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[perm[i]][i] = signs[i]
    return Mat(a)


def conjugate(w: Mat, x: Mat) -> Mat:
    """``w x w^-1`` for an orthogonal signed permutation ``w`` (so ``w^-1 = w^T``)."""
    return w @ x @ w.T


def root_of(rd, x: Mat):
    """The root (or zero) whose space contains ``x``, or None."""
    u = rd.g.coords(x)
    for r in list(rd.roots) + [tuple([0] * rd.rank)]:
        if rd.space(r).contains(u):
            return r
    return None


__all__ = [
    "ElementClass",
    "JacobsonMorozovError",
    "classify_coords",
    "classify_element",
    "conjugate",
    "is_ad_nilpotent",
    "jacobson_morozov",
    "minimal_polynomial",
    "root_of",
    "sl2_triple",
    "weyl_reflection",
]
