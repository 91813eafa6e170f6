"""Check suites binding catalog instances to the form solver and root data.

Each suite returns a :class:`CheckReport`.  Certificates are plain JSON-ready
data: rationals become ``"p/q"`` strings and matrices nested lists of them.
Every form placed in a certificate can be re-validated by :func:`revalidate`,
which rebuilds the isotropy operators from scratch and recomputes the
invariance residual and the signature.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from lorentzhom.catalog import (
    iwasawa_of,
    maximal_unipotent,
    so,
    standard_subalgebra,
    trivial_subalgebra,
)
from lorentzhom.exact import poly
from lorentzhom.exact.linalg import SignatureTriple, Subspace, lin_comb, nullspace, signature
from lorentzhom.exact.matrix import Mat
from lorentzhom.forms import (
    FOUND,
    NONE,
    LorentzVerdict,
    QuotientRep,
    Subalg,
    SymSpace,
    invariant_sym_forms,
    is_invariant,
    lorentz_certificate,
    make_subalg,
    quotient_rep,
    vw_subspaces,
)
from lorentzhom.lie.algebra import LieAlg, random_vector
from lorentzhom.lie.elements import (
    ElementClass,
    classify_coords,
    is_ad_nilpotent,
    minimal_polynomial,
    sl2_triple,
)
from lorentzhom.lie.roots import check_grading, killing_form

PASS, FAIL, UNDETERMINED = "pass", "fail", "undetermined"
DEFAULT_SEED = 20240601
RANDOM_SAMPLES = 3

ANCHORS = {
    "lemma_std_rep": "Lemma: standard representation of so(1,k), unique positive weight and V/W system",
    "cor_so1k_A": "Corollary so(1,k), part A: h contains codimension-one subspaces of g+ and g-",
    "cor_so1k_N": "Corollary so(1,k), part N: V/W subspaces for a unipotent normalizer",
    "prop_so1n": "Proposition so(1,n)/H: standard so(1,n-1) and the n = 2 Killing form",
    "thm_so2n": "Theorem so(2,n)/H: standard so(1,n), with su(1,n/2) as consistency check",
    "root_data": "Restricted roots of so(2,n): B2 system with multiplicities (1, n-2, n-2, 1)",
    "proof_identities": "Root-space identities used in the so(2,n) case analysis",
    "parabolics": "Parabolic subalgebras of so(2,n): normalizer of N plus g_-alpha or g_-beta",
    "properties": "Structural properties: Jacobi, Sylvester, Killing invariance, sl2-triples",
}


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    params: dict
    status: str
    anchor: str
    certificate: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        out = {"name": self.check_name, "params": self.params, "status": self.status,
               "anchor": self.anchor}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def jsonable(x):
    """Convert exact objects to deterministic JSON-ready values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Mat):
        return [[str(v) for v in row] for row in x.tolist()]
    if isinstance(x, SignatureTriple):
        return str(x)
    if isinstance(x, ElementClass):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


class _Items:
    """Collects named sub-results of one check."""

    def __init__(self):
        self.items: dict[str, bool] = {}
        self.data: dict = {}
        self.reasons: list[str] = []
        self.undetermined = False

    def require(self, name: str, ok: bool, why: str = "") -> bool:
        ok = bool(ok)
        self.items[name] = ok
        if not ok:
            self.reasons.append(why or name)
        return ok

    def report(self, check: str, params: dict) -> CheckReport:
        if not all(self.items.values()):
            status = FAIL
        elif self.undetermined:
            status = UNDETERMINED
        else:
            status = PASS
        cert = dict(self.data)
        cert["items"] = dict(self.items)
        if self.reasons:
            cert["reason"] = "; ".join(self.reasons)
        return CheckReport(check, dict(params), status, ANCHORS[check], jsonable(cert))


# shared computations ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _analysis(p: int, q: int, h_name: str) -> tuple[QuotientRep, SymSpace, LorentzVerdict]:
    g = so(p, q)
    h = trivial_subalgebra(g) if h_name == "0" else standard_subalgebra(g, h_name)
    rep = quotient_rep(g, h)
    space = invariant_sym_forms(rep)
    return rep, space, lorentz_certificate(space)


def analyze_quotient(g: LieAlg, h_name: str) -> tuple[QuotientRep, SymSpace, LorentzVerdict]:
    """Quotient representation, invariant forms and verdict for a catalog pair (cached)."""
    return _analysis(g.p, g.q, h_name)


def form_entry(g: LieAlg, h_name: str, q: Mat, acting: str = "h") -> dict:
    return {"g": g.name, "h": h_name, "acting": acting, "matrix": q,
            "signature": signature(q)}


def revalidate_form(entry: dict) -> bool:
    """Rebuild the operators for a certificate form and recheck it from scratch."""
    from lorentzhom.lie.algebra import parse_algebra

    p, q = parse_algebra(entry["g"])
    g = so(p, q)
    mat = Mat([[Fraction(x) for x in row] for row in entry["matrix"]])
    if entry["acting"] == "g":
        ops = [Mat(g.ad_basis(i)) for i in range(g.dim)]
    else:
        h = trivial_subalgebra(g) if entry["h"] == "0" else standard_subalgebra(g, entry["h"])
        ops = list(quotient_rep(g, h).operators)
    sig = signature(mat)
    return (mat.is_symmetric() and is_invariant(mat, ops) and sig.is_minkowski
            and str(sig) == entry["signature"])


def revalidate(report: CheckReport) -> bool:
    """Independent re-check of every form carried by a report's certificate."""
    cert = report.certificate or {}
    return all(revalidate_form(e) for e in cert.get("forms", []))


def _unit(i: int, d: int) -> list[Fraction]:
    return [Fraction(int(i == j)) for j in range(d)]


def _integer_spectrum(rows: Sequence[Sequence]) -> list[int] | None:
    """Integer eigenvalues when the matrix is diagonalizable over Z-spectrum, else None."""
    m = minimal_polynomial(rows)
    if not poly.is_squarefree(m):
        return None
    bound = int(poly.root_bound(m)) + 1
    roots = [r for r in range(-bound, bound + 1) if poly.evaluate(m, r) == 0]
    if poly.trim(poly.from_roots(roots)) != poly.trim(m):
        return None
    return roots


def _eigenspace(rows: Sequence[Sequence], lam, n: int) -> Subspace:
    shifted = [[x - (lam if i == j else 0) for j, x in enumerate(r)] for i, r in enumerate(rows)]
    return Subspace(nullspace(shifted, n), n)


def _weight_spaces(g: LieAlg, t_basis: Sequence[Sequence]) -> dict[tuple, Subspace] | None:
    """Joint eigenspaces of ad t on g, keyed by integer weight tuples."""
    d = g.dim
    spaces = {(): Subspace.full(d)}
    for t in t_basis:
        rows = g.ad(t)
        spec = _integer_spectrum(rows)
        if spec is None:
            return None
        new = {}
        for key, sp in spaces.items():
            for lam in spec:
                part = sp & _eigenspace(rows, lam, d)
                if part.dim:
                    new[key + (lam,)] = part
        spaces = new
    return spaces


def _lex_sign(w: tuple) -> int:
    for x in w:
        if x:
            return 1 if x > 0 else -1
    return 0


def _normalizes(g: LieAlg, u: Sequence, h: Subalg) -> bool:
    hs = h.space
    return all(hs.contains(g.bracket_coords(u, x)) for x in h.coords)


# lemma --------------------------------------------------------------------------------

def check_lemma_std_rep(k: int, seed: int = DEFAULT_SEED) -> CheckReport:
    """The standard representation of so(1,k) on R^(k+1)."""
    if k < 2:
        raise ValueError("the lemma needs k >= 2 (n is trivial for k = 1)")
    g = so(1, k)
    n = g.n
    iw = iwasawa_of(g)
    it = _Items()
    a = iw.a.basis()[0]
    a_rows = g.element(a).tolist()
    spec = _integer_spectrum(a_rows)
    it.require("a_diagonalizable", spec is not None, "split element not diagonalizable")
    positive = sorted(x for x in (spec or []) if x > 0)
    it.require("unique_positive_weight", len(positive) == 1,
               f"positive weights {positive}")
    if not positive:
        return it.report("lemma_std_rep", {"k": k, "seed": seed})
    W = _eigenspace(a_rows, positive[0], n)
    it.require("weight_space_dim_1", W.dim == 1, f"weight space has dim {W.dim}")
    # V = J-orthogonal complement of W
    jw = [[sum(g.J[i, j] * w[j] for j in range(n)) for i in range(n)] for w in W.basis()]
    V = Subspace(nullspace(jw, n), n)
    it.require("codim_V_1", n - V.dim == 1, f"codim V = {n - V.dim}")
    it.require("dim_W_1", W.dim == 1)
    n_basis = iw.n.basis()
    nv_ok = all(W.contains(_apply(g.element(u), v))
                for u in n_basis for v in V.basis())
    it.require("pi_n_V_in_W", nv_ok, "pi(n) V is not inside W")
    rng = random.Random(seed)
    samples = [list(u) for u in n_basis] + [random_vector(rng, n_basis)
                                            for _ in range(RANDOM_SAMPLES)]
    sq_ok = ker_ok = True
    for u in samples:
        x = g.element(u)
        x2 = (x @ x).tolist()
        img = Subspace([[x2[i][j] for i in range(n)] for j in range(n)], n)
        sq_ok &= img == W
        ker_ok &= Subspace(nullspace(x2, n), n) == V
    it.require("square_image_is_W", sq_ok, "pi(u)^2 R^(k+1) differs from W")
    it.require("square_kernel_is_V", ker_ok, "ker pi(u)^2 differs from V")
    it.data.update({"W": W.basis(), "V": V.basis(), "positive_weight": positive[0],
                    "samples": samples[len(n_basis):]})
    return it.report("lemma_std_rep", {"k": k, "seed": seed})


def _apply(x: Mat, v: Sequence) -> list[Fraction]:
    return [sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in x.tolist()]


# corollary, split part -----------------------------------------------------------------

def check_cor_so1k_A(g: LieAlg, h_name: str, t: Subalg) -> CheckReport:
    """``h`` contains codimension-one subspaces of g+ and g- for the weights of ``t``."""
    if t.dim == 0:
        raise ValueError("t must be nonzero")
    params = {"g": g.name, "h": h_name, "t_dim": t.dim}
    rep, space, verdict = analyze_quotient(g, h_name)
    h = rep.h
    it = _Items()
    it.require("minkowski_form_exists", verdict.tag == FOUND, "no invariant Minkowski form")
    it.require("t_abelian", all(not any(g.bracket_coords(x, y)) for x in t.coords for y in t.coords),
               "t is not abelian")
    it.require("t_normalizes_h", all(_normalizes(g, x, h) for x in t.coords),
               "t does not normalize h")
    if not all(it.items.values()):
        return it.report("cor_so1k_A", params)
    q = verdict.certificate
    it.require("form_t_invariant", is_invariant(q, [rep.induced(x) for x in t.coords]),
               "the form is not invariant under t")
    spaces = _weight_spaces(g, t.coords)
    it.require("t_diagonalizable", spaces is not None, "ad t not diagonalizable with integer weights")
    if spaces is None:
        return it.report("cor_so1k_A", params)
    d = g.dim
    gp = gm = Subspace.zero(d)
    for w, sp in spaces.items():
        s = _lex_sign(w)
        if s > 0:
            gp = gp + sp
        elif s < 0:
            gm = gm + sp
    hs = h.space
    ip, im = (gp & hs).dim, (gm & hs).dim
    it.require("g_plus_codim_le_1", ip >= gp.dim - 1, f"dim(g+ & h) = {ip}, dim g+ = {gp.dim}")
    it.require("g_minus_codim_le_1", im >= gm.dim - 1, f"dim(g- & h) = {im}, dim g- = {gm.dim}")
    it.data.update({"dim_g_plus": gp.dim, "dim_g_plus_cap_h": ip, "dim_g_minus": gm.dim,
                    "dim_g_minus_cap_h": im, "weights": sorted(spaces),
                    "forms": [form_entry(g, h_name, q)]})
    return it.report("cor_so1k_A", params)


# corollary, unipotent part ----------------------------------------------------------------

def check_cor_so1k_N(g: LieAlg, h_name: str, u: Sequence) -> CheckReport:
    """Items (a)-(e) for ``V = {v : (ad u)^2 v in h}`` and ``W = h + (ad u)^2 g``."""
    u = [Fraction(x) for x in u]
    if not any(u):
        raise ValueError("u must be nonzero")
    params = {"g": g.name, "h": h_name, "u": jsonable(u)}
    rep, space, verdict = analyze_quotient(g, h_name)
    h = rep.h
    it = _Items()
    it.require("minkowski_form_exists", verdict.tag == FOUND, "no invariant Minkowski form")
    it.require("u_nilpotent", is_ad_nilpotent(g, u), "ad u is not nilpotent")
    it.require("u_normalizes_h", _normalizes(g, u, h), "u does not normalize h")
    if not all(it.items.values()):
        return it.report("cor_so1k_N", params)
    q = verdict.certificate
    it.require("form_u_invariant", is_invariant(q, [rep.induced(u)]),
               "the form is not invariant under u")
    vw = vw_subspaces(g, h, u)
    it.data.update({"codim_V": vw.codim_V, "dim_W_mod_h": vw.dim_W_mod_h,
                    "degenerate": vw.degenerate, "forms": [form_entry(g, h_name, q)]})
    if vw.degenerate:
        # second branch of the dichotomy: V and W are not pinned down by u alone
        it.require("d_dichotomy", True)
        it.undetermined = True
        it.reasons.append("[g, u] lies in h, so V and W are not determined by u")
        return it.report("cor_so1k_N", params)
    it.require("a_codim_V_1", vw.codim_V == 1, f"dim(g/V) = {vw.codim_V}")
    it.require("b_dim_W_mod_h_1", vw.dim_W_mod_h == 1, f"dim(W/h) = {vw.dim_W_mod_h}")
    it.require("c_bracket_V_u_in_W",
               vw.W.contains_all(g.bracket_coords(v, u) for v in vw.V.basis()),
               "[V, u] is not inside W")
    it.require("d_dichotomy", vw.W == h.space + g.ad_image(u, 2))
    it.require("e_square_V_in_h", h.space.contains_all(
        g.bracket_coords(u, g.bracket_coords(u, v)) for v in vw.V.basis()),
        "(ad u)^2 V is not inside h")
    return it.report("cor_so1k_N", params)


# rank one ---------------------------------------------------------------------------------

def check_prop_so1n(n: int, seed: int = DEFAULT_SEED) -> CheckReport:
    """so(1,n)/so(1,n-1) carries an invariant Minkowski form; extra checks for n = 2 and n >= 3."""
    if n < 2:
        raise ValueError("n must be at least 2")
    g = so(1, n)
    h_name = f"so(1,{n - 1})"
    params = {"n": n, "seed": seed}
    it = _Items()
    rep, space, verdict = analyze_quotient(g, h_name)
    it.require("quotient_dim_n", rep.m == n, f"quotient dimension {rep.m}")
    it.require("forms_dim_1", space.dim == 1, f"invariant forms of dimension {space.dim}")
    it.require("verdict_found", verdict.tag == FOUND, verdict.reason)
    forms = []
    if verdict.tag == FOUND:
        forms.append(form_entry(g, h_name, verdict.certificate))
        it.data["signature"] = signature(verdict.certificate)
    if n == 2:
        kf = killing_form(g)
        _, zspace, _ = analyze_quotient(g, "0")
        it.require("killing_in_symspace", zspace.contains(kf))
        it.require("killing_ad_invariant",
                   is_invariant(kf, [Mat(g.ad_basis(i)) for i in range(g.dim)]))
        ks = signature(kf)
        it.require("killing_minkowski", ks.is_minkowski, f"Killing signature {ks}")
        it.data["killing_signature"] = ks
        forms.append(form_entry(g, "0", kf, acting="g"))
    else:
        iw = iwasawa_of(g)
        rng = random.Random(seed)
        samples = [list(u) for u in iw.n.basis()] + [random_vector(rng, iw.n.basis())
                                                    for _ in range(RANDOM_SAMPLES)]
        it.require("ad_u_squared_g_is_n", all(g.ad_image(u, 2) == iw.n for u in samples),
                   "(ad u)^2 g differs from n")
    it.data["forms"] = forms
    return it.report("prop_so1n", params)


# rank two ---------------------------------------------------------------------------------

def _root_data_items(n: int, it: _Items) -> None:
    g = so(2, n)
    iw = iwasawa_of(g)
    rd = iw.roots
    a, b = rd.alpha_beta()
    named = {"alpha": a, "beta": b, "alpha+beta": tuple(x + y for x, y in zip(a, b)),
             "alpha+2beta": tuple(x + 2 * y for x, y in zip(a, b))}
    expected = set(named.values()) | {tuple(-x for x in r) for r in named.values()}
    it.require("root_set_B2", set(rd.roots) == expected, f"roots {sorted(rd.roots)}")
    mults = [rd.multiplicity(r) for r in named.values()]
    it.require("multiplicities", mults == [1, n - 2, n - 2, 1], f"multiplicities {mults}")
    it.require("g0_is_a_plus_m", rd.zero_space == iw.a + iw.m and
               rd.zero_space.dim == iw.a.dim + iw.m.dim)
    it.require("n_is_sum_of_positive", iw.n == rd.sum_of(list(named.values())))
    it.require("grading", not check_grading(rd), "[g_x, g_y] leaves g_(x+y)")
    it.data.update({"roots": {k: list(v) for k, v in named.items()}, "multiplicities": mults})


def check_root_data(n: int) -> CheckReport:
    if n < 3:
        raise ValueError("n must be at least 3")
    it = _Items()
    _root_data_items(n, it)
    return it.report("root_data", {"n": n})


def _named_roots(rd):
    a, b = rd.alpha_beta()

    def r(i, j):
        return tuple(i * x + j * y for x, y in zip(a, b))
    return r


def check_proof_identities(n: int, seed: int = DEFAULT_SEED) -> CheckReport:
    """Bracket identities among the so(2,n) root spaces."""
    if n < 3:
        raise ValueError("n must be at least 3")
    g = so(2, n)
    rd = iwasawa_of(g).roots
    r = _named_roots(rd)
    it = _Items()
    ga, gb, gab, ga2b = rd.space(r(1, 0)), rd.space(r(0, 1)), rd.space(r(1, 1)), rd.space(r(1, 2))
    it.require("bracket_alpha_beta", g.bracket_space(ga, gb) == gab, "[g_a, g_b] differs from g_(a+b)")
    top = Subspace.zero(g.dim)
    for u in ga2b.basis():
        top = top + g.ad_image(u, 2)
    it.require("square_alpha_2beta", top == ga2b, "(ad g_(a+2b))^2 g differs from g_(a+2b)")
    rng = random.Random(seed)
    target = ga + gab + ga2b
    samples = gab.basis() + [random_vector(rng, gab.basis()) for _ in range(RANDOM_SAMPLES)]
    it.require("square_alpha_beta", all(g.ad_image(u, 2) == target for u in samples),
               "(ad u)^2 g differs from g_a + g_(a+b) + g_(a+2b)")
    return it.report("proof_identities", {"n": n, "seed": seed})


def check_thm_so2n(n: int) -> CheckReport:
    if n < 3:
        raise ValueError("n must be at least 3")
    g = so(2, n)
    it = _Items()
    h_name = f"so(1,{n})"
    rep, space, verdict = analyze_quotient(g, h_name)
    it.require("i_forward_found", verdict.tag == FOUND, verdict.reason)
    it.require("i_forms_dim_1", space.dim == 1, f"invariant forms of dimension {space.dim}")
    forms = []
    if verdict.tag == FOUND:
        forms.append(form_entry(g, h_name, verdict.certificate))
        it.data["signature"] = signature(verdict.certificate)
    unip = {h_name: maximal_unipotent(rep.h).dim}
    if n % 2 == 0:
        su_name = f"su(1,{n // 2})"
        srep, sspace, sverdict = analyze_quotient(g, su_name)
        it.require("ii_consistency_su_none", sverdict.tag == NONE,
                   f"{su_name}: {sverdict.tag} ({sverdict.reason})")
        it.data["consistency"] = {"h": su_name, "quotient_dim": srep.m,
                                  "forms_dim": sspace.dim, "verdict": sverdict.tag,
                                  "reason": sverdict.reason}
        unip[su_name] = maximal_unipotent(srep.h).dim
    else:
        it.data["consistency"] = "skipped: n odd"
    _root_data_items(n, it)
    it.require("iv_unipotent_dims", all(v == n - 1 for v in unip.values()),
               f"maximal unipotent dimensions {unip}")
    it.data["unipotent_dims"] = unip
    it.data["forms"] = forms
    return it.report("thm_so2n", {"n": n})


def check_parabolics(n: int) -> CheckReport:
    if n < 3:
        raise ValueError("n must be at least 3")
    g = so(2, n)
    iw = iwasawa_of(g)
    rd = iw.roots
    r = _named_roots(rd)
    it = _Items()
    entries = {name: standard_subalgebra(g, name) for name in ("min_parabolic", "p_alpha", "p_beta")}
    spaces = {k: v.space for k, v in entries.items()}
    base = iw.m + iw.a + iw.n
    it.require("closed", all(bool(e.closure_certificate) for e in entries.values()))
    it.require("normalizer_of_n", g.normalizer(iw.n) == base,
               "normalizer of n differs from m + a + n")
    it.require("contain_normalizer", all(base.issubspace(s) for s in spaces.values()))
    vals = list(spaces.values())
    it.require("pairwise_distinct", all(vals[i] != vals[j] for i in range(3) for j in range(i)))
    it.require("proper", all(s.dim < g.dim for s in vals))
    m_dim = (n - 2) * (n - 3) // 2
    mp = m_dim + 2 + 2 * n - 2
    dims = [s.dim for s in vals]
    it.require("dimensions", dims == [mp, mp + 1, mp + n - 2], f"dimensions {dims}")
    pa, pb = spaces["p_alpha"], spaces["p_beta"]
    s1 = rd.space(r(-1, -2)) + rd.space(r(0, -1)) + rd.space(r(1, 0))
    s2 = rd.space(r(-1, 0)) + rd.space(r(-1, -1)) + rd.space(r(-1, -2))
    codims = {"p_alpha_in_S1": s1.dim - (pa & s1).dim, "p_beta_in_S1": s1.dim - (pb & s1).dim,
              "p_alpha_in_S2": s2.dim - (pa & s2).dim, "p_beta_in_S2": s2.dim - (pb & s2).dim}
    it.require("p_alpha_misses_S1", codims["p_alpha_in_S1"] >= 2)
    it.require("p_beta_meets_S1_codim_1", codims["p_beta_in_S1"] == 1)
    it.require("p_alpha_misses_S2", codims["p_alpha_in_S2"] >= 2)
    it.require("p_beta_misses_S2", codims["p_beta_in_S2"] >= 2)
    it.data.update({"dims": dict(zip(spaces, dims)), "codims": codims})
    return it.report("parabolics", {"n": n})


# property suites ---------------------------------------------------------------------------

def _random_invertible(rng: random.Random, m: int) -> Mat:
    from lorentzhom.exact.linalg import determinant

    while True:
        p = Mat([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)]
                 for _ in range(m)])
        if determinant(p):
            return p


def check_properties(g: LieAlg, seed: int = DEFAULT_SEED, triples: int = 20,
                     congruences: int = 100, nilpotents: int = 10) -> CheckReport:
    """Jacobi, Sylvester invariance, Killing ad-invariance and sl2-triples on ``g``."""
    rng = random.Random(seed)
    d = g.dim
    basis = [_unit(i, d) for i in range(d)]
    it = _Items()
    jac = 0
    for _ in range(triples):
        x, y, z = (random_vector(rng, basis) for _ in range(3))
        terms = [g.bracket_coords(x, g.bracket_coords(y, z)),
                 g.bracket_coords(y, g.bracket_coords(z, x)),
                 g.bracket_coords(z, g.bracket_coords(x, y))]
        jac += any(a + b + c for a, b, c in zip(*terms))
    it.require("jacobi", jac == 0, f"{jac} Jacobi residuals")
    kf = killing_form(g)
    kl = kf.tolist()

    def kill(u, v):
        return sum(kl[i][j] * u[i] * v[j] for i in range(d) if u[i] for j in range(d) if v[j])

    bad = 0
    for _ in range(triples):
        x, y, z = (random_vector(rng, basis) for _ in range(3))
        bad += kill(g.bracket_coords(x, y), z) + kill(y, g.bracket_coords(x, z)) != 0
    it.require("killing_ad_invariant", bad == 0, f"{bad} ad-invariance residuals")
    syl = 0
    for _ in range(congruences):
        m = rng.randint(1, 6)
        s = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            for j in range(i, m):
                s[i][j] = s[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        s = Mat(s)
        p = _random_invertible(rng, m)
        syl += signature(p.T @ s @ p) != signature(s)
    it.require("sylvester", syl == 0, f"{syl} signature changes under congruence")
    n_basis = _nilpotent_pool(g)
    jm = 0
    if n_basis:
        for _ in range(nilpotents):
            e = random_vector(rng, n_basis)
            h, _, f = sl2_triple(g, e)
            br = g.bracket_coords
            jm += (br(h, e) != [2 * c for c in e] or br(h, f) != [-2 * c for c in f]
                   or br(e, f) != h)
            v = [-c for c in f]
            vu = br(v, e)
            jm += (classify_coords(g, vu) != ElementClass.HYPERBOLIC
                   or br(vu, e) != [2 * c for c in e])
    it.require("sl2_triples", jm == 0, f"{jm} sl2-triple residuals")
    it.data.update({"triples": triples, "congruences": congruences,
                    "nilpotents": nilpotents if n_basis else 0})
    return it.report("properties", {"g": g.name, "seed": seed})


def _nilpotent_pool(g: LieAlg) -> list[list[Fraction]]:
    try:
        return iwasawa_of(g).n.basis()
    except ValueError:
        return []


# driver -----------------------------------------------------------------------------------

def run_all(max_n: int, seed: int = DEFAULT_SEED) -> list[CheckReport]:
    """Every suite for every admissible parameter up to ``max_n``, in a fixed order."""
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    out = []
    for k in range(2, max_n + 1):
        out.append(check_lemma_std_rep(k, seed))
    for n in range(2, max_n + 1):
        out.append(check_prop_so1n(n, seed))
    for n in range(3, max_n + 1):
        g = so(1, n)
        out.append(check_cor_so1k_A(g, f"so(1,{n - 1})", _split_part(g, f"so(1,{n - 1})")))
        out.append(check_cor_so1k_N(g, f"so(1,{n - 1})", _unipotent_in_h(g, f"so(1,{n - 1})")))
    for n in range(3, max_n + 1):
        g = so(2, n)
        out.append(check_root_data(n))
        out.append(check_proof_identities(n, seed))
        out.append(check_parabolics(n))
        out.append(check_thm_so2n(n))
        out.append(check_cor_so1k_A(g, f"so(1,{n})", _split_part(g, f"so(1,{n})")))
        out.append(check_cor_so1k_N(g, f"so(1,{n})", _unipotent_in_h(g, f"so(1,{n})")))
    for g in [so(1, n) for n in range(2, max_n + 1)] + [so(2, n) for n in range(3, max_n + 1)]:
        out.append(check_properties(g, seed))
    return out


def _split_part(g: LieAlg, h_name: str) -> Subalg:
    """The split subspace of the standard a lying in h."""
    h = analyze_quotient(g, h_name)[0].h
    return make_subalg(g, (h.space & iwasawa_of(g).a).basis(), "a & h")


def _unipotent_in_h(g: LieAlg, h_name: str) -> list[Fraction]:
    h = analyze_quotient(g, h_name)[0].h
    part = h.space & iwasawa_of(g).n
    return lin_comb([1] * part.dim, part.basis())


def summarize(reports: Sequence[CheckReport]) -> dict:
    counts = {PASS: 0, FAIL: 0, UNDETERMINED: 0}
    for r in reports:
        counts[r.status] += 1
    if counts[FAIL]:
        status = FAIL
    elif counts[UNDETERMINED]:
        status = UNDETERMINED
    else:
        status = PASS
    return {"status": status, "total": len(reports), **counts}


__all__ = [
    "ANCHORS",
    "CheckReport",
    "DEFAULT_SEED",
    "FAIL",
    "PASS",
    "UNDETERMINED",
    "analyze_quotient",
    "check_cor_so1k_A",
    "check_cor_so1k_N",
    "check_lemma_std_rep",
    "check_parabolics",
    "check_proof_identities",
    "check_prop_so1n",
    "check_properties",
    "check_root_data",
    "check_thm_so2n",
    "form_entry",
    "jsonable",
    "revalidate",
    "revalidate_form",
    "run_all",
    "summarize",
]
