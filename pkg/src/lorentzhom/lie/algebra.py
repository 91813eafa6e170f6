"""The matrix Lie algebras so(p,q) with exact structure constants."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from lorentzhom.exact.linalg import SpanSolver, Subspace, image, lin_comb, nullspace
from lorentzhom.exact.matrix import Mat

_ZERO = Fraction(0)


class NotInAlgebraError(ValueError):
    """A matrix that was expected to lie in the ambient algebra does not."""

    def __init__(self, index: int | None, message: str = "matrix is not in the algebra"):
        super().__init__(message if index is None else f"element {index}: {message}")
        self.index = index


@dataclass(frozen=True, eq=False)
class LieAlg:
    """so(p,q) acting on R^(p+q) and preserving ``J = diag(-1_p, +1_q)``.

    Coordinates of an element are read from its strict upper triangle: the
    basis element for the pair ``i < j`` is ``E_ij - E_ji`` when both indices
    sit in the same sign block, ``E_ij + E_ji`` otherwise.
    """

    p: int
    q: int
    basis: tuple[Mat, ...]
    pairs: tuple[tuple[int, int], ...]
    # structure_constants[i][j] is a sparse tuple of (k, c) with [b_i, b_j] = sum c b_k
    structure_constants: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]
    J: Mat
    _ad_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        """Size of the defining matrices."""
        return self.p + self.q

    ambient_dim = n

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def name(self) -> str:
        return f"so({self.p},{self.q})"

    def is_compact_pair(self, i: int, j: int) -> bool:
        return (i < self.p) == (j < self.p)

    def labels(self) -> list[str]:
        return [("k" if self.is_compact_pair(i, j) else "p") + f"{i + 1},{j + 1}"
                for i, j in self.pairs]

    # coordinates ------------------------------------------------------------

    def contains(self, x: Mat) -> bool:
        if x.shape != (self.n, self.n):
            return False
        # X^T J + J X = 0: antisymmetric within a sign block, symmetric across
        e = x._e
        p = self.p
        for i in range(self.n):
            if e[i][i]:
                return False
            for j in range(i + 1, self.n):
                a, b = e[i][j], e[j][i]
                if ((i < p) == (j < p) and a != -b) or ((i < p) != (j < p) and a != b):
                    return False
        return True

    def coords(self, x: Mat, index: int | None = None) -> list[Fraction]:
        if not self.contains(x):
            raise NotInAlgebraError(index)
        return [x[i, j] for i, j in self.pairs]

    def element(self, coords: Sequence) -> Mat:
        n = self.n
        a = [[_ZERO] * n for _ in range(n)]
        for (i, j), c in zip(self.pairs, coords):
            if c:
                c = Fraction(c)
                a[i][j] = c
                a[j][i] = -c if self.is_compact_pair(i, j) else c
        return Mat(a)

    # brackets ----------------------------------------------------------------

    def bracket(self, x: Mat, y: Mat) -> Mat:
        return x.bracket(y)

    def bracket_coords(self, u: Sequence, v: Sequence) -> list[Fraction]:
        out = [_ZERO] * self.dim
        sc = self.structure_constants
        vnz = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = sc[i]
            for j, b in vnz:
                for k, c in row[j]:
                    out[k] += a * b * c
        return out

    def ad_basis(self, i: int) -> list[list[Fraction]]:
        """Matrix of ad(b_i) in the basis, as rows (cached)."""
        if i not in self._ad_cache:
            d = self.dim
            m = [[_ZERO] * d for _ in range(d)]
            for j in range(d):
                for k, c in self.structure_constants[i][j]:
                    m[k][j] = c
            self._ad_cache[i] = m
        return self._ad_cache[i]

    def ad(self, u: Sequence) -> list[list[Fraction]]:
        """Matrix of ad(u) for a coordinate vector ``u``, as rows."""
        d = self.dim
        m = [[_ZERO] * d for _ in range(d)]
        sc = self.structure_constants
        for i, a in enumerate(u):
            if not a:
                continue
            row = sc[i]
            for j in range(d):
                for k, c in row[j]:
                    m[k][j] += a * c
        return m

    def ad_mat(self, x: Mat) -> Mat:
        return Mat(self.ad(self.coords(x)))

    # subspaces ---------------------------------------------------------------

    def span(self, elements: Iterable[Mat]) -> Subspace:
        return Subspace([self.coords(x, i) for i, x in enumerate(elements)], self.dim)

    def span_coords(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace(vectors, self.dim)

    def full(self) -> Subspace:
        return Subspace.full(self.dim)

    def bracket_space(self, a: Subspace, b: Subspace) -> Subspace:
        """The span of all brackets ``[x, y]`` with x in ``a`` and y in ``b``."""
        return Subspace([self.bracket_coords(u, v) for u in a.basis() for v in b.basis()],
                        self.dim)

    def ad_image(self, u: Sequence, power: int = 1, of: Subspace | None = None) -> Subspace:
        """``(ad u)^power`` applied to ``of`` (default: the whole algebra)."""
        vecs = of.basis() if of is not None else [
            [Fraction(int(i == j)) for j in range(self.dim)] for i in range(self.dim)]
        for _ in range(power):
            vecs = [self.bracket_coords(u, v) for v in vecs]
        return Subspace(vecs, self.dim)

    def centralizer(self, sub: Subspace, within: Subspace | None = None) -> Subspace:
        return self._solve_ad_condition(sub, Subspace.zero(self.dim), within)

    def normalizer(self, sub: Subspace, within: Subspace | None = None) -> Subspace:
        return self._solve_ad_condition(sub, sub, within)

    def _solve_ad_condition(self, sub: Subspace, target: Subspace,
                            within: Subspace | None) -> Subspace:
        """``{x in within : [x, s] in target for all s in sub}``."""
        d = self.dim
        domain = within.basis() if within is not None else [
            [Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        # x = sum a_t w_t; [x, s] = sum a_t [w_t, s] must lie in target: project
        # out the target with a complement-coordinate map.
        proj = _quotient_map(target, d)
        rows = []
        for s in sub.basis():
            images = [self.bracket_coords(w, s) for w in domain]
            for prow in proj:
                rows.append([sum((a * b for a, b in zip(prow, img) if a and b), _ZERO)
                             for img in images])
        sols = nullspace(rows, len(domain)) if rows else [
            [Fraction(int(i == j)) for j in range(len(domain))] for i in range(len(domain))]
        return Subspace([lin_comb(c, domain) for c in sols], d)


def _quotient_map(target: Subspace, d: int) -> list[list[Fraction]]:
    """Rows of a linear map Q^d -> Q^r whose kernel is exactly ``target``."""
    if target.dim == 0:
        return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    # Kernel of the map = target  <=>  rows span the annihilator of target.
    return nullspace(target.basis(), d)


def make_so(p: int, q: int) -> LieAlg:
    """Build so(p,q) with its standard basis and verified structure constants."""
    if p < 0 or q < 0 or p + q < 2:
        raise ValueError(f"so({p},{q}) needs p, q >= 0 and p + q >= 2")
    n = p + q
    pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    index = {pr: t for t, pr in enumerate(pairs)}
    basis = []
    for i, j in pairs:
        a = [[0] * n for _ in range(n)]
        a[i][j] = 1
        a[j][i] = -1 if (i < p) == (j < p) else 1
        basis.append(Mat(a))
    brackets = [[x.bracket(y) for y in basis] for x in basis]
    sc = tuple(tuple(tuple((index[(i, j)], z[i, j]) for i, j in pairs if z[i, j]) for z in row)
               for row in brackets)
    g = LieAlg(p, q, tuple(basis), pairs, sc, Mat.diag([-1] * p + [1] * q))
    _verify_structure(g, brackets)
    return g


def _verify_structure(g: LieAlg, brackets) -> None:
    for i, x in enumerate(g.basis):
        if not (x.T @ g.J + g.J @ x).is_zero():
            raise AssertionError(f"basis element {i} does not preserve J")
    if g.span(g.basis).dim != g.dim:
        raise AssertionError("basis is not linearly independent")
    # reading coordinates off the upper triangle must lose nothing
    for i, row in enumerate(brackets):
        for j, z in enumerate(row):
            coeffs = [_ZERO] * g.dim
            for k, c in g.structure_constants[i][j]:
                coeffs[k] = c
            if not g.contains(z) or g.element(coeffs) != z:
                raise AssertionError(f"structure constants wrong for pair {(i, j)}")


def parse_algebra(text: str) -> tuple[int, int]:
    """Parse ``"so(P,Q)"`` into ``(P, Q)``."""
    s = text.replace(" ", "")
    if not (s.startswith("so(") and s.endswith(")")):
        raise ValueError(f"expected so(P,Q), got {text!r}")
    parts = s[3:-1].split(",")
    if len(parts) != 2 or not all(x.isdigit() for x in parts):
        raise ValueError(f"expected so(P,Q), got {text!r}")
    return int(parts[0]), int(parts[1])


# closure -----------------------------------------------------------------------

@dataclass(frozen=True)
class ClosureCertificate:
    """Expansion of every bracket ``[b_i, b_j]`` (i < j) in the given basis."""

    coefficients: dict

    def __bool__(self):
        return True


@dataclass(frozen=True)
class ClosureFailure:
    """A pair of basis indices whose bracket leaves the span."""

    pair: tuple[int, int]

    def __bool__(self):
        return False


def is_subalgebra(g: LieAlg, basis: Sequence[Mat]) -> ClosureCertificate | ClosureFailure:
    vecs = [g.coords(x, i) for i, x in enumerate(basis)]
    return closure_of_coords(g, vecs)


def closure_of_coords(g: LieAlg, vecs: Sequence[Sequence]) -> ClosureCertificate | ClosureFailure:
    k = len(vecs)
    solver = SpanSolver(vecs, g.dim)
    coeffs = {}
    for i in range(k):
        for j in range(i + 1, k):
            sol = solver.express(g.bracket_coords(vecs[i], vecs[j]))
            if sol is None:
                return ClosureFailure((i, j))
            coeffs[(i, j)] = tuple(sol)
    return ClosureCertificate(coeffs)


# sampling -----------------------------------------------------------------------

def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if x or not nonzero:
            return x


def random_vector(rng: random.Random, basis: Sequence[Sequence]) -> list[Fraction]:
    """A seeded random nonzero rational combination of independent ``basis``."""
    while True:
        c = [random_rational(rng) for _ in basis]
        if any(c):
            return lin_comb(c, basis)


__all__ = [
    "ClosureCertificate",
    "ClosureFailure",
    "LieAlg",
    "NotInAlgebraError",
    "closure_of_coords",
    "image",
    "is_subalgebra",
    "make_so",
    "parse_algebra",
    "random_rational",
    "random_vector",
]
