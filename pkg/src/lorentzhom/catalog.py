"""Exact constructions of the distinguished subalgebras of so(1,n) and so(2,n)."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from lorentzhom.exact.linalg import Subspace, nullspace
from lorentzhom.exact.matrix import Mat
from lorentzhom.forms import Subalg, make_subalg, subalg_from_mats, subalg_from_space
from lorentzhom.lie.algebra import LieAlg, make_so
from lorentzhom.lie.elements import conjugate, weyl_reflection
from lorentzhom.lie.roots import IwasawaData, iwasawa


class CatalogError(ValueError):
    pass


@lru_cache(maxsize=None)
def so(p: int, q: int) -> LieAlg:
    """Cached :func:`make_so`; algebras are immutable so sharing is safe."""
    return make_so(p, q)


_IWASAWA: dict[int, IwasawaData] = {}


def iwasawa_of(g: LieAlg) -> IwasawaData:
    key = id(g)
    if key not in _IWASAWA or _IWASAWA[key].g is not g:
        _IWASAWA[key] = iwasawa(g)
    return _IWASAWA[key]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: dict
    builder: Callable[[LieAlg], Subalg] = field(repr=False, compare=False)
    expected_dim: int
    description: str = ""

    def build(self, g: LieAlg) -> Subalg:
        h = self.builder(g)
        if h.dim != self.expected_dim:
            raise AssertionError(f"{self.name}: built dimension {h.dim}, expected {self.expected_dim}")
        return h


# builders ---------------------------------------------------------------------------

def _coordinate_block(g: LieAlg, keep: list[int], name: str) -> Subalg:
    """Basis elements of g supported on the coordinates in ``keep``."""
    keep_set = set(keep)
    d = g.dim
    vecs = [[Fraction(int(t == s)) for s in range(d)]
            for t, (i, j) in enumerate(g.pairs) if i in keep_set and j in keep_set]
    return make_subalg(g, vecs, name)


def so1_in_so1(g: LieAlg) -> Subalg:
    """so(1,n-1) in so(1,n): the upper-left block, last coordinate fixed."""
    return _coordinate_block(g, list(range(g.n - 1)), f"so(1,{g.q - 1})")


def so1_in_so2(g: LieAlg) -> Subalg:
    """so(1,n) in so(2,n): delete the first negative coordinate.

    This copy meets the standard split subspace in the kernel of alpha + beta.
    """
    return _coordinate_block(g, list(range(1, g.n)), f"so(1,{g.q})")


def _complex_entry(a: list, r: int, c: int, re_part: int, im_part: int) -> None:
    # z = x + iy acts on (x, y) as [[re, -im], [im, re]]
    a[2 * r][2 * c] += re_part
    a[2 * r][2 * c + 1] += -im_part
    a[2 * r + 1][2 * c] += im_part
    a[2 * r + 1][2 * c + 1] += re_part


def su1k_basis(k: int, size: int) -> list[Mat]:
    """Realified basis of su(1,k), padded with zeros to ``size``.

    Complex coordinates z_r = x_r + i y_r are laid out as (x0, y0, x1, y1, ...),
    which turns the hermitian form -|z0|^2 + sum |z_r|^2 into diag(-1,-1,1,...,1).
    """
    if size < 2 * k + 2:
        raise CatalogError("ambient too small for su(1,k)")
    mats = []

    def new():
        return [[0] * size for _ in range(size)]

    for j in range(k):
        a = new()
        _complex_entry(a, j, j, 0, 1)
        _complex_entry(a, j + 1, j + 1, 0, -1)
        mats.append(a)
    for l in range(1, k + 1):
        a = new()
        _complex_entry(a, 0, l, 1, 0)
        _complex_entry(a, l, 0, 1, 0)
        mats.append(a)
        a = new()
        _complex_entry(a, 0, l, 0, 1)
        _complex_entry(a, l, 0, 0, -1)
        mats.append(a)
    for j in range(1, k + 1):
        for l in range(j + 1, k + 1):
            a = new()
            _complex_entry(a, j, l, 1, 0)
            _complex_entry(a, l, j, -1, 0)
            mats.append(a)
            a = new()
            _complex_entry(a, j, l, 0, 1)
            _complex_entry(a, l, j, 0, 1)
            mats.append(a)
    return [Mat(a) for a in mats]


# The realified coordinates already carry the ambient J, so the congruence
# to the ambient convention is the identity.
def su1k_change_of_basis(k: int) -> Mat:
    return Mat.identity(2 * k + 2)


def su1k_in_so2(g: LieAlg, k: int) -> Subalg:
    if g.p != 2 or g.q not in (2 * k, 2 * k + 1):
        raise CatalogError(f"su(1,{k}) embeds in so(2,{2 * k}) or so(2,{2 * k + 1}), not {g.name}")
    return subalg_from_mats(g, su1k_basis(k, g.n), f"su(1,{k})")


def conjugate_subalg(h: Subalg, w: Mat, name: str) -> Subalg:
    return subalg_from_mats(h.ambient, [conjugate(w, x) for x in h.basis], name)


def _iw_part(which: str) -> Callable[[LieAlg], Subalg]:
    def build(g: LieAlg) -> Subalg:
        return subalg_from_space(g, getattr(iwasawa_of(g), which), which)
    return build


def min_parabolic(g: LieAlg) -> Subalg:
    """Normalizer of n: m + a + n, i.e. the zero root space plus n."""
    iw = iwasawa_of(g)
    return subalg_from_space(g, iw.roots.zero_space + iw.n, "min_parabolic")


def _parabolic(which: str) -> Callable[[LieAlg], Subalg]:
    def build(g: LieAlg) -> Subalg:
        iw = iwasawa_of(g)
        alpha, beta = iw.roots.alpha_beta()
        root = alpha if which == "alpha" else beta
        neg = tuple(-x for x in root)
        return subalg_from_space(g, iw.roots.zero_space + iw.n + iw.roots.space(neg),
                                 f"p_{which}")
    return build


def maximal_unipotent(h: Subalg) -> Subspace:
    """Positive eigenspaces, inside h, of a split element of h lying in the standard a.

    For h of real rank one this is the nilradical of a minimal parabolic of h.
    """
    g = h.ambient
    iw = iwasawa_of(g)
    t_space = h.space & iw.a
    if t_space.dim == 0:
        raise CatalogError(f"{h.name} meets the standard split subspace trivially")
    t = t_space.basis()[0]
    ad_t = g.ad(t)
    d = g.dim
    out = Subspace.zero(d)
    for lam in (1, 2, 3, 4):
        rows = [[x - (lam if i == j else 0) for j, x in enumerate(r)] for i, r in enumerate(ad_t)]
        out = out + (Subspace(nullspace(rows, d), d) & h.space)
    return out


# catalog ----------------------------------------------------------------------------

def list_catalog(g: LieAlg) -> list[CatalogEntry]:
    """Deterministically ordered entries valid for so(1,n) or so(2,n>=3); else empty."""
    p, n = g.p, g.q
    entries: list[CatalogEntry] = []
    if p == 1 and n >= 2:
        m_dim = (n - 1) * (n - 2) // 2
        entries += [
            CatalogEntry(f"so(1,{n - 1})", {"n": n}, so1_in_so1, n * (n - 1) // 2,
                         "upper-left block fixing the last coordinate"),
            CatalogEntry("a", {"n": n}, _iw_part("a"), 1),
            CatalogEntry("n", {"n": n}, _iw_part("n"), n - 1),
            CatalogEntry("m", {"n": n}, _iw_part("m"), m_dim),
            CatalogEntry("min_parabolic", {"n": n}, min_parabolic, m_dim + 1 + (n - 1)),
        ]
    elif p == 2 and n >= 3:
        k = n // 2
        m_dim = (n - 2) * (n - 3) // 2
        mp = m_dim + 2 + (2 * n - 2)
        entries += [
            CatalogEntry(f"so(1,{n})", {"n": n}, so1_in_so2, (n + 1) * n // 2,
                         "delete the first negative coordinate"),
            CatalogEntry(f"so(1,{n})^s_alpha", {"n": n},
                         lambda g: conjugate_subalg(so1_in_so2(g), weyl_reflection(g, "alpha"),
                                                    f"so(1,{g.q})^s_alpha"),
                         (n + 1) * n // 2, "conjugate of so(1,n) by the alpha reflection"),
            CatalogEntry(f"su(1,{k})", {"n": n, "k": k}, lambda g: su1k_in_so2(g, g.q // 2),
                         (k + 1) ** 2 - 1, "realification of C^(k+1)"),
            CatalogEntry("a", {"n": n}, _iw_part("a"), 2),
            CatalogEntry("n", {"n": n}, _iw_part("n"), 2 * n - 2),
            CatalogEntry("m", {"n": n}, _iw_part("m"), m_dim),
            CatalogEntry("min_parabolic", {"n": n}, min_parabolic, mp),
            CatalogEntry("p_alpha", {"n": n}, _parabolic("alpha"), mp + 1),
            CatalogEntry("p_beta", {"n": n}, _parabolic("beta"), mp + n - 2),
        ]
    return entries


_ALIASES = {
    "so(1,n-1)<so(1,n)": lambda g: f"so(1,{g.q - 1})",
    "so(1,n)<so(2,n)": lambda g: f"so(1,{g.q})",
    "su(1,k)<so(2,2k)": lambda g: f"su(1,{g.q // 2})",
    "su(1,k)<so(2,2k+1)": lambda g: f"su(1,{g.q // 2})",
}


def canonical_name(g: LieAlg, name: str) -> str:
    s = re.sub(r"\s+", "", name).replace("−", "-")
    if s in _ALIASES:
        return _ALIASES[s](g)
    return s


def standard_subalgebra(g: LieAlg, name: str) -> Subalg:
    key = canonical_name(g, name)
    for entry in list_catalog(g):
        if entry.name == key:
            return entry.build(g)
    known = ", ".join(e.name for e in list_catalog(g)) or "none"
    raise CatalogError(f"unknown subalgebra {name!r} for {g.name}; known: {known}")


def trivial_subalgebra(g: LieAlg) -> Subalg:
    return make_subalg(g, [], "0")
