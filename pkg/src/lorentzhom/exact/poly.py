"""Univariate polynomials over Q and exact real-root counting.

A polynomial is a list of Fractions, constant term first, with no trailing
zeros (the zero polynomial is ``[]``).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from lorentzhom.exact.matrix import Mat, as_rat

Poly = list

_ZERO = Fraction(0)


def trim(p: Sequence) -> Poly:
    p = [as_rat(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x) -> Fraction:
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [_ZERO] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and r:
        shift = len(r) - len(q)
        f = r[-1] / lead
        quo[shift] = f
        for i, c in enumerate(q):
            r[i + shift] -= f * c
        r = trim(r)
    return trim(quo), r


def monic(p: Poly) -> Poly:
    return [c / p[-1] for c in p] if p else []


def gcd_poly(p: Poly, q: Poly) -> Poly:
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(p: Poly) -> Poly:
    return trim([i * p[i] for i in range(1, len(p))])


def squarefree_part(p: Poly) -> Poly:
    """``p / gcd(p, p')`` made monic: same roots, each simple."""
    if degree(p) <= 0:
        return monic(p)
    g = gcd_poly(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def is_squarefree(p: Poly) -> bool:
    return degree(gcd_poly(p, derivative(p))) <= 0


def from_roots(roots: Sequence) -> Poly:
    out = [Fraction(1)]
    for r in roots:
        out = mul(out, [-as_rat(r), Fraction(1)])
    return out


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Lagrange interpolation through distinct rational nodes."""
    result: Poly = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = mul(basis, [-as_rat(xj), Fraction(1)])
                denom *= xi - xj
        result = add(result, [c * yi / denom for c in basis])
    return result


def charpoly(m: Mat) -> Poly:
    """``det(t I - m)`` by evaluation at integer nodes and interpolation."""
    from lorentzhom.exact.linalg import determinant

    n = m.rows
    xs = list(range(n + 1))
    ys = [determinant(Mat.diag([x] * n) - m) for x in xs]
    return interpolate(xs, ys)


# Sturm sequences ------------------------------------------------------------

def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    seq.pop()
    return seq


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at(p: Poly, x) -> int:
    if x == "-inf":
        return _sign(p[-1]) * (1 if degree(p) % 2 == 0 else -1) if p else 0
    if x == "+inf":
        return _sign(p[-1]) if p else 0
    return _sign(evaluate(p, x))


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``; None means infinite."""
    p = trim(p)
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    if degree(p) == 0:
        return 0
    # a squarefree input keeps the count right when an endpoint is a multiple root
    seq = sturm_sequence(squarefree_part(p))
    a = "-inf" if lo is None else as_rat(lo)
    b = "+inf" if hi is None else as_rat(hi)
    return _variations(_sign_at(q, a) for q in seq) - _variations(_sign_at(q, b) for q in seq)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every complex root has modulus strictly less than this."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=_ZERO)


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint sorted intervals ``(lo, hi)``, each with exactly one root inside.

    Endpoints are never roots, so consecutive intervals leave a root-free
    rational point between any two neighbouring roots.
    """
    p = squarefree_part(trim(p))
    if degree(p) <= 0:
        return []
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = count_real_roots(p, lo, hi)
        if k == 0:
            continue
        if k == 1 and evaluate(p, hi) != 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        # Nudge the split point off any root so endpoints stay root-free.
        step = (hi - lo) / 4
        while evaluate(p, mid) == 0:
            step /= 2
            mid += step
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def separating_points(p: Poly) -> list[Fraction]:
    """Rational points hitting every open interval cut out by the real roots of ``p``."""
    ivs = isolate_real_roots(p)
    if not ivs:
        return [_ZERO]
    pts = [ivs[0][0] - 1]
    pts.extend(hi for _, hi in ivs)
    return pts


def all_roots_real(p: Poly) -> bool:
    """True when every complex root of ``p`` is real (multiplicity ignored)."""
    s = squarefree_part(trim(p))
    return count_real_roots(s) == degree(s)
