"""Killing form, Iwasawa data and restricted root decompositions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from lorentzhom.exact.linalg import Subspace, inverse, nullspace
from lorentzhom.exact.matrix import Mat
from lorentzhom.lie.algebra import LieAlg, closure_of_coords

_ZERO = Fraction(0)

Root = tuple[int, ...]

# Joint ad-eigenvalues are searched in this integer box.
ROOT_BOX = 2


def killing_form(g: LieAlg) -> Mat:
    """Gram matrix of ``B(x, y) = tr(ad x ad y)`` from the structure constants."""
    d = g.dim
    sc = g.structure_constants
    b = [[_ZERO] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            # tr(ad_i ad_j) = sum_{l,k} c_{il}^k c_{jk}^l
            acc = _ZERO
            for l in range(d):
                for k, c in sc[i][l]:
                    for l2, c2 in sc[j][k]:
                        if l2 == l:
                            acc += c * c2
            b[i][j] = b[j][i] = acc
    return Mat(b)


def standard_a_basis(g: LieAlg) -> list[Mat]:
    """``E_{i,p+i} + E_{p+i,i}`` for ``i < p``: a maximal split abelian subspace."""
    out = []
    for i in range(g.p):
        a = [[0] * g.n for _ in range(g.n)]
        a[i][g.p + i] = a[g.p + i][i] = 1
        out.append(Mat(a))
    return out


def _is_lex_positive(r: Sequence[int]) -> bool:
    for x in r:
        if x:
            return x > 0
    return False


@dataclass(frozen=True, eq=False)
class RootDecomp:
    """Simultaneous ad-eigenspaces of an abelian split subspace."""

    g: LieAlg
    a_basis: tuple[Mat, ...]
    roots: tuple[Root, ...]
    root_spaces: dict  # Root -> Subspace (coordinates in g's basis)
    zero_space: Subspace
    _adapted_inverse: Mat
    _blocks: tuple  # (root or zero tuple, start, stop) in the adapted basis

    @property
    def rank(self) -> int:
        return len(self.a_basis)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if _is_lex_positive(r))

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        pos = set(self.positive_roots)
        sums = {tuple(a + b for a, b in zip(x, y)) for x in pos for y in pos}
        return tuple(r for r in self.positive_roots if r not in sums)

    def multiplicity(self, root: Root) -> int:
        return self.root_spaces[tuple(root)].dim if tuple(root) in self.root_spaces else 0

    def space(self, root: Sequence[int]) -> Subspace:
        root = tuple(root)
        if not any(root):
            return self.zero_space
        return self.root_spaces.get(root, Subspace.zero(self.g.dim))

    def sum_of(self, roots: Sequence[Sequence[int]]) -> Subspace:
        out = Subspace.zero(self.g.dim)
        for r in roots:
            out = out + self.space(r)
        return out

    def space_mats(self, root: Sequence[int]) -> list[Mat]:
        return [self.g.element(v) for v in self.space(root).basis()]

    def alpha_beta(self) -> tuple[Root, Root]:
        """Simple roots ``(alpha, beta)`` of a B2 system: ``alpha + 2 beta`` is a root."""
        simple = self.simple_roots
        if len(simple) != 2:
            raise ValueError("alpha/beta are defined for real rank two only")
        x, y = simple
        if _add(x, _scale(2, y)) in self.root_spaces:
            return x, y
        if _add(y, _scale(2, x)) in self.root_spaces:
            return y, x
        raise ValueError("simple roots do not form a B2 system")

    def components(self, v: Sequence) -> dict:
        """Projections of ``v`` onto every root space and the zero space."""
        c = [sum((a * b for a, b in zip(row, v) if a and b), _ZERO)
             for row in self._adapted_inverse.tolist()]
        out = {}
        for key, start, stop in self._blocks:
            basis = self.space(key).basis()
            vec = [_ZERO] * self.g.dim
            for coeff, bvec in zip(c[start:stop], basis):
                if coeff:
                    for j, x in enumerate(bvec):
                        if x:
                            vec[j] += coeff * x
            out[key] = vec
        return out

    def project(self, v: Sequence, roots: Sequence[Sequence[int]]) -> list[Fraction]:
        """Projection onto the sum of the given root spaces along the others."""
        comps = self.components(v)
        out = [_ZERO] * self.g.dim
        for r in roots:
            for j, x in enumerate(comps.get(tuple(r), ())):
                out[j] += x
        return out


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _scale(c, x):
    return tuple(c * a for a in x)


def root_decomposition(g: LieAlg, a_basis: Sequence[Mat] | None = None) -> RootDecomp:
    if a_basis is None:
        a_basis = standard_a_basis(g)
    a_basis = tuple(a_basis)
    if not a_basis:
        raise ValueError("empty a-basis")
    acoords = [g.coords(a, i) for i, a in enumerate(a_basis)]
    for u in acoords:
        for v in acoords:
            if any(g.bracket_coords(u, v)):
                raise ValueError("a-basis is not abelian")
    ads = [g.ad(u) for u in acoords]
    d = g.dim
    spaces = {}
    for c in itertools.product(range(-ROOT_BOX, ROOT_BOX + 1), repeat=len(ads)):
        rows = []
        for m, ct in zip(ads, c):
            for i in range(d):
                r = list(m[i])
                r[i] -= ct
                rows.append(r)
        sp = Subspace(nullspace(rows, d), d)
        if sp.dim:
            spaces[tuple(c)] = sp
    total = sum(sp.dim for sp in spaces.values())
    order = sorted(spaces, key=lambda r: (not any(r), tuple(-x for x in r)))
    adapted = [v for r in order for v in spaces[r].basis()]
    if total != d or Subspace(adapted, d).dim != d:
        raise ValueError("eigenspaces do not exhaust the algebra; the a-basis is unsuitable")
    zero = tuple([0] * len(ads))
    zero_space = spaces.pop(zero, Subspace.zero(d))
    blocks = []
    start = 0
    for r in order:
        size = (zero_space if r == zero else spaces[r]).dim
        blocks.append((r, start, start + size))
        start += size
    inv = inverse(Mat(adapted).T)
    roots = tuple(r for r in order if r != zero)
    return RootDecomp(g, a_basis, roots, spaces, zero_space, inv, tuple(blocks))


def check_grading(rd: RootDecomp) -> list[tuple[Root, Root]]:
    """Pairs ``(phi, psi)`` violating ``[g_phi, g_psi] in g_{phi+psi}`` (empty if none)."""
    g = rd.g
    keys = list(rd.roots) + [tuple([0] * rd.rank)]
    bad = []
    for x in keys:
        for y in keys:
            target = rd.space(_add(x, y))
            if not g.bracket_space(rd.space(x), rd.space(y)).issubspace(target):
                bad.append((x, y))
    return bad


@dataclass(frozen=True, eq=False)
class IwasawaData:
    g: LieAlg
    k: Subspace
    a: Subspace
    n: Subspace
    m: Subspace
    roots: RootDecomp

    def mats(self, which: str) -> list[Mat]:
        return [self.g.element(v) for v in getattr(self, which).basis()]

    @property
    def k_basis(self):
        return self.mats("k")

    @property
    def a_basis(self):
        return self.mats("a")

    @property
    def n_basis(self):
        return self.mats("n")

    @property
    def m_basis(self):
        return self.mats("m")


def _supported(g: LieAlg) -> bool:
    return (g.p == 1 and g.q >= 1) or (g.p == 2 and g.q >= 3)


def iwasawa(g: LieAlg) -> IwasawaData:
    if not _supported(g):
        raise ValueError(f"Iwasawa data is only provided for so(1,n) and so(2,n>=3), not {g.name}")
    rd = root_decomposition(g)
    d = g.dim
    k = Subspace([[Fraction(int(t == s)) for s in range(d)]
                  for t, (i, j) in enumerate(g.pairs) if g.is_compact_pair(i, j)], d)
    a = g.span(rd.a_basis)
    n = rd.sum_of(rd.positive_roots)
    m = g.centralizer(a, within=k)
    data = IwasawaData(g, k, a, n, m, rd)
    verify_iwasawa(data)
    return data


def is_nilpotent_subalgebra(g: LieAlg, s: Subspace) -> bool:
    cur = s
    for _ in range(s.dim + 1):
        if cur.dim == 0:
            return True
        cur = g.bracket_space(s, cur)
    return cur.dim == 0


def verify_iwasawa(data: IwasawaData) -> None:
    g = data.g
    d = g.dim
    if data.k.dim + data.a.dim + data.n.dim != d or (data.k + data.a + data.n).dim != d:
        raise AssertionError("k + a + n is not a direct sum equal to g")
    for x in data.a_basis:
        if x.T != x:
            raise AssertionError("a is not in the (-1)-eigenspace of the Cartan involution")
    for x in data.k_basis:
        if x.T != -x:
            raise AssertionError("k is not in the (+1)-eigenspace of the Cartan involution")
    if g.bracket_space(data.a, data.a).dim:
        raise AssertionError("a is not abelian")
    if not closure_of_coords(g, data.n.basis()) or not is_nilpotent_subalgebra(g, data.n):
        raise AssertionError("n is not a nilpotent subalgebra")
    if not g.bracket_space(data.a, data.n).issubspace(data.n):
        raise AssertionError("a does not normalize n")
    if g.bracket_space(data.m, data.a).dim or not data.m.issubspace(data.k):
        raise AssertionError("m does not centralize a inside k")
