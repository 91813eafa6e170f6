"""Invariant symmetric forms on quotients g/h and the Minkowski decision.

A form on g/h is invariant under h when ``rho(X)^T Q + Q rho(X) = 0`` for the
induced action ``rho`` of every basis element X of h.  The verdicts below are
exact: every "found" carries a re-checkable certificate and every "none"
records why no Minkowski form can exist.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from lorentzhom.exact import poly
from lorentzhom.exact.linalg import (
    SignatureTriple,
    Subspace,
    determinant,
    echelon,
    inverse,
    lin_comb,
    nullspace,
    signature,
    sym_basis,
    sym_from_coords,
)
from lorentzhom.exact.matrix import Mat
from lorentzhom.lie.algebra import ClosureCertificate, LieAlg, closure_of_coords

_ZERO = Fraction(0)


class SubalgebraError(ValueError):
    def __init__(self, name: str, pair: tuple[int, int]):
        super().__init__(f"{name}: bracket of basis elements {pair} leaves the span")
        self.pair = pair


@dataclass(frozen=True, eq=False)
class Subalg:
    """A bracket-closed subspace of an ambient so(p,q), with its certificate."""

    ambient: LieAlg
    coords: tuple[tuple[Fraction, ...], ...]
    closure_certificate: ClosureCertificate
    name: str = ""

    @property
    def basis(self) -> list[Mat]:
        return [self.ambient.element(v) for v in self.coords]

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def space(self) -> Subspace:
        return Subspace(self.coords, self.ambient.dim)

    def __repr__(self):
        return f"Subalg({self.name or '?'} in {self.ambient.name}, dim={self.dim})"


def make_subalg(g: LieAlg, vectors: Sequence[Sequence], name: str = "") -> Subalg:
    """Build a Subalg from coordinate vectors, certifying bracket closure."""
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    cert = closure_of_coords(g, vecs)
    if not cert:
        raise SubalgebraError(name or "subalgebra", cert.pair)
    return Subalg(g, tuple(vecs), cert, name)


def subalg_from_mats(g: LieAlg, mats: Sequence[Mat], name: str = "") -> Subalg:
    return make_subalg(g, [g.coords(x, i) for i, x in enumerate(mats)], name)


def subalg_from_space(g: LieAlg, space: Subspace, name: str = "") -> Subalg:
    return make_subalg(g, space.basis(), name)


# quotient representation -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QuotientRep:
    """The action of h on g/h in the coordinates of a fixed complement."""

    g: LieAlg
    h: Subalg
    complement: tuple[tuple[Fraction, ...], ...]
    operators: tuple[Mat, ...]
    _inv: Mat = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.complement)

    @property
    def complement_basis(self) -> list[Mat]:
        return [self.g.element(v) for v in self.complement]

    def quotient_coords(self, v: Sequence) -> list[Fraction]:
        """Coordinates of ``v + h`` in g/h."""
        k = self.h.dim
        rows = self._inv.tolist()[k:]
        return [sum((a * b for a, b in zip(r, v) if a and b), _ZERO) for r in rows]

    def induced(self, y: Sequence) -> Mat:
        """Matrix of ``ad y`` on g/h; ``y`` must normalize h."""
        if not self.g.bracket_space(Subspace([y], self.g.dim), self.h.space) \
                .issubspace(self.h.space):
            raise ValueError("element does not normalize h")
        cols = [self.quotient_coords(self.g.bracket_coords(y, c)) for c in self.complement]
        return Mat.from_columns(cols, self.m) if cols else Mat.zeros(0)


def greedy_complement(g: LieAlg, h_space: Subspace, order: Sequence[int] | None = None):
    """Extend h by ambient basis vectors, in the given order, to a basis of g."""
    d = g.dim
    cur = h_space
    comp = []
    for i in (order if order is not None else range(d)):
        e = [Fraction(int(i == j)) for j in range(d)]
        if not cur.contains(e):
            comp.append(tuple(e))
            cur = cur + Subspace([e], d)
        if cur.dim == d:
            break
    return comp


def quotient_rep(g: LieAlg, h: Subalg, order: Sequence[int] | None = None) -> QuotientRep:
    """Induced action of h on g/h, with a greedy complement (optionally reordered)."""
    if h.ambient is not g:
        raise ValueError("subalgebra belongs to a different ambient algebra")
    if h.dim >= g.dim:
        raise ValueError("h = g: the quotient is trivial")
    comp = greedy_complement(g, h.space, order)
    full = [list(v) for v in h.coords] + [list(v) for v in comp]
    inv = inverse(Mat(full).T)
    k = h.dim
    inv_rows = inv.tolist()[k:]

    def qc(v):
        return [sum((a * b for a, b in zip(r, v) if a and b), _ZERO) for r in inv_rows]

    ops = []
    for x in h.coords:
        cols = [qc(g.bracket_coords(x, c)) for c in comp]
        ops.append(Mat.from_columns(cols))
    rep = QuotientRep(g, h, tuple(comp), tuple(ops), inv)
    _verify_quotient_rep(rep)
    return rep


def _verify_quotient_rep(rep: QuotientRep) -> None:
    g, h = rep.g, rep.h
    hs = h.space
    for t, (x, op) in enumerate(zip(h.coords, rep.operators)):
        for j, c in enumerate(rep.complement):
            img = g.bracket_coords(x, c)
            approx = lin_comb(op.col(j), rep.complement)
            if not hs.contains([a - b for a, b in zip(img, approx)]):
                raise AssertionError(f"operator {t} misrepresents the action on g/h")
    coeffs = h.closure_certificate.coefficients
    for (i, j), c in coeffs.items():
        lhs = Mat.zeros(rep.m)
        for ck, op in zip(c, rep.operators):
            if ck:
                lhs = lhs + op.scale(ck)
        if lhs != rep.operators[i].bracket(rep.operators[j]):
            raise AssertionError(f"rho is not a representation on pair {(i, j)}")


# invariant forms -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SymSpace:
    """All symmetric forms on g/h invariant under the given operators."""

    dim_quotient: int
    basis_forms: tuple[Mat, ...]
    operators: tuple[Mat, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis_forms)

    def form(self, coeffs: Sequence) -> Mat:
        out = Mat.zeros(self.dim_quotient)
        for c, q in zip(coeffs, self.basis_forms):
            if c:
                out = out + q.scale(c)
        return out

    def contains(self, q: Mat) -> bool:
        if q.shape != (self.dim_quotient, self.dim_quotient) or not q.is_symmetric():
            return False
        m = self.dim_quotient
        idx = sym_basis(m)
        vecs = [[b[i, j] for i, j in idx] for b in self.basis_forms]
        return Subspace(vecs, len(idx)).contains([q[i, j] for i, j in idx])


def invariance_residual(q: Mat, operators: Sequence[Mat]) -> list[Mat]:
    """``rho^T Q + Q rho`` for each operator (all zero iff Q is invariant)."""
    return [op.T @ q + q @ op for op in operators]


def is_invariant(q: Mat, operators: Sequence[Mat]) -> bool:
    return all(r.is_zero() for r in invariance_residual(q, operators))


def _constraint_columns(op: Mat, forms: Sequence[Sequence], m: int, idx):
    """Upper-triangular entries of ``op^T Q + Q op`` for each form (as columns)."""
    cols = []
    opl = op.tolist()
    for coords in forms:
        q = [[_ZERO] * m for _ in range(m)]
        for (i, j), c in zip(idx, coords):
            if c:
                q[i][j] = c
                q[j][i] = c
        # (Q op)[i][j] = sum_k Q[i][k] op[k][j];  (op^T Q)[i][j] = (Q op)[j][i]
        qop = [[_ZERO] * m for _ in range(m)]
        for i in range(m):
            qi = q[i]
            for k in range(m):
                a = qi[k]
                if a:
                    ok = opl[k]
                    row = qop[i]
                    for j in range(m):
                        if ok[j]:
                            row[j] += a * ok[j]
        cols.append([qop[i][j] + qop[j][i] for i, j in idx])
    return cols


def invariant_sym_forms(qrep: QuotientRep | Sequence[Mat], m: int | None = None) -> SymSpace:
    """Solve ``rho^T Q + Q rho = 0`` over symmetric Q, one operator at a time."""
    if isinstance(qrep, QuotientRep):
        ops, m = list(qrep.operators), qrep.m
    else:
        ops = list(qrep)
        if m is None:
            m = ops[0].rows
    idx = sym_basis(m)
    n_sym = len(idx)
    forms = [[Fraction(int(a == b)) for b in range(n_sym)] for a in range(n_sym)]
    for op in ops:
        if not forms:
            break
        cols = _constraint_columns(op, forms, m, idx)
        rows = [[c[r] for c in cols] for r in range(n_sym)]
        sols = nullspace(rows, len(forms))
        forms = [lin_comb(s, forms) for s in sols]
    ech, _ = echelon(forms, n_sym)
    basis = tuple(sym_from_coords(r, m) for r in ech)
    for q in basis:
        if not is_invariant(q, ops):
            raise AssertionError("solver returned a non-invariant form")
    return SymSpace(m, basis, tuple(ops))


# Minkowski decision ---------------------------------------------------------------

FOUND, NONE, UNDETERMINED = "found", "none", "undetermined"

GRID_BOX = 4
GRID_MAX_DEN = 16
GRID_RANDOM_SAMPLES = 2000


@dataclass(frozen=True)
class LorentzVerdict:
    tag: str
    certificate: Mat | None = None
    reason: str = ""
    evidence: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.tag == FOUND


def _found(q: Mat, reason: str, evidence: dict) -> LorentzVerdict:
    sig = signature(q)
    if sig.n_pos == 1 and sig.n_neg != 1:
        q = -q  # report in the (-,+,...,+) convention
        sig = signature(q)
    evidence = dict(evidence, signature=str(sig))
    return LorentzVerdict(FOUND, q, reason, evidence)


def pencil_determinant(q1: Mat, q2: Mat) -> list[Fraction]:
    """``det(t q1 + q2)`` as a polynomial in t."""
    m = q1.rows
    xs = list(range(m + 1))
    ys = [determinant(q1.scale(x) + q2) for x in xs]
    return poly.interpolate(xs, ys)


def analyze_pencil(q1: Mat, q2: Mat) -> tuple[Mat | None, list[tuple[Fraction, SignatureTriple]]]:
    """Decide whether some ``x q1 + y q2`` is Minkowski.

    Inertia is constant on each arc of the projective line between zeros of
    ``det(t q1 + q2)``; one rational sample per arc therefore covers every
    nondegenerate member.  Returns a Minkowski member (or None) and the samples.
    """
    det = pencil_determinant(q1, q2)
    if not det:
        return None, []
    samples = []
    for t in poly.separating_points(det):
        q = q1.scale(t) + q2
        sig = signature(q)
        samples.append((t, sig))
        if sig.is_minkowski:
            return q, samples
    return None, samples


def _integer_eigenspaces(op: Mat, bound: int = 4) -> dict[int, Subspace]:
    m = op.rows
    rows = op.tolist()
    out = {}
    for lam in range(-bound, bound + 1):
        if lam == 0:
            continue
        shifted = [[x - (lam if i == j else 0) for j, x in enumerate(r)] for i, r in enumerate(rows)]
        ker = nullspace(shifted, m)
        if ker:
            out[lam] = Subspace(ker, m)
    return out


def isotropic_obstruction(operators: Sequence[Mat]) -> dict | None:
    """A subspace isotropic for every invariant form, of dimension at least 2.

    For an operator with eigenvalues lambda, mu and ``lambda + mu != 0`` the
    eigenspaces are orthogonal for every invariant form, so the sum of the
    eigenspaces with positive eigenvalue is totally isotropic.  A totally
    isotropic subspace of dimension r forces ``min(n_pos, n_neg) >= r`` for a
    nondegenerate form, which rules out Minkowski forms once r >= 2.
    """
    for t, op in enumerate(operators):
        if op.rows == 0:
            continue
        spaces = _integer_eigenspaces(op)
        for sign in (1, -1):
            part = Subspace.zero(op.rows)
            for lam, sp in spaces.items():
                if lam * sign > 0:
                    part = part + sp
            if part.dim >= 2:
                return {"operator": t, "sign": sign, "isotropic_dim": part.dim,
                        "isotropic_basis": part.basis()}
    return None


def verify_isotropic(space: SymSpace, basis: Sequence[Sequence]) -> bool:
    """Every basis form vanishes on ``span(basis)``."""
    for q in space.basis_forms:
        ql = q.tolist()
        for u in basis:
            qu = [sum((a * b for a, b in zip(r, u) if a and b), _ZERO) for r in ql]
            for v in basis:
                if sum((a * b for a, b in zip(qu, v) if a and b), _ZERO):
                    return False
    return True


def _grid_vectors(d: int, rng: random.Random):
    seen = set()
    for c in itertools.product(range(-GRID_BOX, GRID_BOX + 1), repeat=d):
        first = next((x for x in c if x), 0)
        if first > 0:
            seen.add(c)
            yield [Fraction(x) for x in c]
    for _ in range(GRID_RANDOM_SAMPLES):
        c = [Fraction(rng.randint(-GRID_BOX * GRID_MAX_DEN, GRID_BOX * GRID_MAX_DEN),
                      rng.randint(1, GRID_MAX_DEN)) for _ in range(d)]
        if any(c):
            yield c


def lorentz_certificate(space: SymSpace, seed: int = 0) -> LorentzVerdict:
    """Decide whether the solution space contains a Minkowski form."""
    m, d = space.dim_quotient, space.dim
    ev = {"dim_quotient": m, "dim_forms": d}
    if m < 2:
        return LorentzVerdict(NONE, reason="dimension: quotient has dimension < 2", evidence=ev)
    if d == 0:
        return LorentzVerdict(NONE, reason="no nonzero invariant symmetric form", evidence=ev)
    if d == 1:
        q = space.basis_forms[0]
        sig = signature(q)
        ev["generator_signature"] = str(sig)
        if sig.is_minkowski:
            return _found(q, "one-dimensional solution space with Minkowski generator", ev)
        return LorentzVerdict(
            NONE, reason=f"one-dimensional solution space; generator signature {sig}", evidence=ev)
    if d == 2:
        q1, q2 = space.basis_forms
        q, samples = analyze_pencil(q1, q2)
        ev["pencil_samples"] = [(str(t), str(s)) for t, s in samples]
        if q is not None:
            return _found(q, "pencil analysis found a Minkowski member", ev)
        if not samples:
            return LorentzVerdict(NONE, reason="pencil: every member is degenerate", evidence=ev)
        # q1 itself is the point at infinity of the pencil; its arc is sampled
        return LorentzVerdict(
            NONE, reason="pencil analysis: no arc of the pencil has Minkowski signature",
            evidence=ev)
    obstruction = isotropic_obstruction(space.operators)
    if obstruction is not None and verify_isotropic(space, obstruction["isotropic_basis"]):
        ev["isotropic_dim"] = obstruction["isotropic_dim"]
        ev["operator"] = obstruction["operator"]
        return LorentzVerdict(
            NONE,
            reason=(f"common isotropic subspace of dimension {obstruction['isotropic_dim']} "
                    "forces at least two directions of each sign"),
            evidence=ev)
    rng = random.Random(seed)
    tried = 0
    for c in _grid_vectors(d, rng):
        tried += 1
        q = space.form(c)
        if signature(q).is_minkowski:
            ev["grid_tried"] = tried
            return _found(q, "grid search found a Minkowski member", ev)
    ev["grid_tried"] = tried
    return LorentzVerdict(UNDETERMINED, reason="grid search found no Minkowski member", evidence=ev)


def recheck_certificate(verdict: LorentzVerdict, operators: Sequence[Mat]) -> bool:
    """Independent re-validation of a "found" verdict."""
    q = verdict.certificate
    return (verdict.tag == FOUND and q is not None and q.is_symmetric()
            and is_invariant(q, operators) and signature(q).is_minkowski)


# V / W subspaces ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class VWSubspaces:
    V: Subspace
    W: Subspace
    codim_V: int
    dim_W_mod_h: int
    degenerate: bool


def vw_subspaces(g: LieAlg, h: Subalg, u: Sequence) -> VWSubspaces:
    """``W = h + (ad u)^2 g`` and ``V = {v : (ad u)^2 v in h}``."""
    hs = h.space
    us = Subspace([u], g.dim)
    if not g.bracket_space(us, hs).issubspace(hs):
        raise ValueError("u does not normalize h")
    degenerate = g.ad_image(u, 1).issubspace(hs)
    W = hs + g.ad_image(u, 2)
    # preimage of h under (ad u)^2:  (ad u)^2 v - sum c_i h_i = 0
    d = g.dim
    cols = []
    for i in range(d):
        e = [Fraction(int(i == j)) for j in range(d)]
        cols.append(g.bracket_coords(u, g.bracket_coords(u, e)))
    hb = [list(v) for v in h.coords]
    allcols = cols + [[-x for x in v] for v in hb]
    system = [[c[r] for c in allcols] for r in range(d)]
    V = Subspace([s[:d] for s in nullspace(system, len(allcols))], d)
    return VWSubspaces(V, W, d - V.dim, W.dim - hs.dim, degenerate)


__all__ = [
    "FOUND",
    "LorentzVerdict",
    "NONE",
    "QuotientRep",
    "Subalg",
    "SubalgebraError",
    "SymSpace",
    "UNDETERMINED",
    "VWSubspaces",
    "analyze_pencil",
    "invariance_residual",
    "invariant_sym_forms",
    "is_invariant",
    "isotropic_obstruction",
    "lorentz_certificate",
    "make_subalg",
    "quotient_rep",
    "recheck_certificate",
    "subalg_from_mats",
    "subalg_from_space",
    "vw_subspaces",
]
