import random
from fractions import Fraction as F

import pytest

from lorentzhom.catalog import iwasawa_of, so, standard_subalgebra, trivial_subalgebra
from lorentzhom.exact.linalg import signature
from lorentzhom.exact.matrix import Mat
from lorentzhom.forms import (
    FOUND,
    NONE,
    UNDETERMINED,
    LorentzVerdict,
    SubalgebraError,
    SymSpace,
    analyze_pencil,
    invariant_sym_forms,
    is_invariant,
    isotropic_obstruction,
    lorentz_certificate,
    make_subalg,
    quotient_rep,
    recheck_certificate,
    verify_isotropic,
    vw_subspaces,
)
from lorentzhom.lie.roots import killing_form


def forms_for(g, h, order=None):
    rep = quotient_rep(g, h, order)
    return rep, invariant_sym_forms(rep)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rank_one_quotient_has_lorentz_line(n):
    g = so(1, n)
    rep, space = forms_for(g, standard_subalgebra(g, f"so(1,{n - 1})"))
    assert rep.m == n
    assert space.dim == 1
    v = lorentz_certificate(space)
    assert v.tag == FOUND and signature(v.certificate).is_minkowski
    assert recheck_certificate(v, rep.operators)


def test_so23_over_so13():
    g = so(2, 3)
    rep, space = forms_for(g, standard_subalgebra(g, "so(1,3)"))
    assert (rep.m, space.dim) == (4, 1)
    v = lorentz_certificate(space)
    assert v.tag == FOUND
    # reported in the (-,+,...,+) convention
    assert signature(v.certificate) == (3, 1, 0)


def test_operators_form_a_representation():
    g = so(2, 4)
    h = standard_subalgebra(g, "su(1,2)")
    rep = quotient_rep(g, h)
    cert = h.closure_certificate.coefficients
    for (i, j), c in cert.items():
        lhs = Mat.zeros(rep.m)
        for ck, op in zip(c, rep.operators):
            lhs = lhs + op.scale(ck)
        assert lhs == rep.operators[i].bracket(rep.operators[j])


def test_complement_order_does_not_change_answer():
    g = so(2, 4)
    for name in ("so(1,4)", "su(1,2)"):
        h = standard_subalgebra(g, name)
        _, base = forms_for(g, h)
        order = list(range(g.dim))
        random.Random(3).shuffle(order)
        _, other = forms_for(g, h, order)
        assert other.dim == base.dim
        v1, v2 = lorentz_certificate(base), lorentz_certificate(other)
        assert v1.tag == v2.tag
        if v1.tag == FOUND:
            assert signature(v1.certificate) == signature(v2.certificate)


def test_solution_space_is_closed_under_negation_and_sums():
    g = so(2, 4)
    _, space = forms_for(g, standard_subalgebra(g, "su(1,2)"))
    q1, q2 = space.basis_forms
    for q in (-q1, q1 + q2.scale(F(3, 2)), q2.scale(-7)):
        assert space.contains(q)
        assert is_invariant(q, space.operators)
    assert not space.contains(Mat.identity(space.dim_quotient))


def test_trivial_h_gives_all_forms_and_contains_killing():
    g = so(1, 2)
    rep, space = forms_for(g, trivial_subalgebra(g))
    assert rep.m == 3 and space.dim == 6
    k = killing_form(g)
    assert space.contains(k)
    assert signature(k) == (2, 1, 0)


def test_quotient_rep_rejects():
    g = so(1, 3)
    with pytest.raises(ValueError):
        quotient_rep(g, make_subalg(g, [[int(i == j) for j in range(g.dim)] for i in range(g.dim)]))
    with pytest.raises(SubalgebraError):
        make_subalg(g, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]], "two boosts")


# the Minkowski decision ------------------------------------------------------------

def _brute_pencil(q1, q2):
    """Oracle: sample many rational members plus q1 itself."""
    ts = [F(k, 8) for k in range(-200, 201)]
    members = [q1.scale(t) + q2 for t in ts] + [q1]
    return any(signature(q).is_minkowski for q in members)


@pytest.mark.parametrize("d1, d2, expected", [
    ([1, 1, 1, 1], [1, 1, -1, -1], False),
    ([1, 1, 1, 1], [1, -1, -1, -1], True),
    ([1, -1, 0], [0, 0, 1], True),
    ([1, 1, 0], [1, 0, 0], False),
    ([0, 0, 0], [0, 0, 0], False),
])
def test_pencil_against_sampling_oracle(d1, d2, expected):
    q1, q2 = Mat.diag(d1), Mat.diag(d2)
    found, _ = analyze_pencil(q1, q2)
    assert (found is not None) == expected == _brute_pencil(q1, q2)
    if found is not None:
        assert signature(found).is_minkowski


def test_pencil_with_off_diagonal_members():
    q1 = Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    q2 = Mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    found, samples = analyze_pencil(q1, q2)
    assert (found is not None) == _brute_pencil(q1, q2)
    assert samples


@pytest.mark.parametrize("n, h, method", [
    (4, "su(1,2)", "pencil"),
    (6, "su(1,3)", "isotropic"),
    (8, "su(1,4)", "pencil"),
])
def test_su_quotients_have_no_lorentz_form(n, h, method):
    g = so(2, n)
    rep, space = forms_for(g, standard_subalgebra(g, h))
    v = lorentz_certificate(space)
    assert v.tag == NONE
    assert method in v.reason
    # the isotropic obstruction agrees independently of the pencil
    ob = isotropic_obstruction(space.operators)
    assert ob is not None and ob["isotropic_dim"] >= 2
    assert verify_isotropic(space, ob["isotropic_basis"])


def test_degenerate_and_small_cases():
    assert lorentz_certificate(SymSpace(1, (Mat.identity(1),))).tag == NONE
    assert lorentz_certificate(SymSpace(3, ())).tag == NONE
    v = lorentz_certificate(SymSpace(3, (Mat.identity(3),)))
    assert v.tag == NONE and "(3,0,0)" in v.reason


def test_grid_search_found_and_undetermined():
    e = [Mat.unit(3, i, i) for i in range(3)]
    v = lorentz_certificate(SymSpace(3, tuple(e)))
    assert v.tag == FOUND and signature(v.certificate).is_minkowski
    # every member is degenerate in the third direction, so no proof is possible either way
    degenerate = (Mat.unit(3, 0, 0), Mat.unit(3, 1, 1), Mat.unit(3, 0, 1) + Mat.unit(3, 1, 0))
    v = lorentz_certificate(SymSpace(3, degenerate))
    assert v.tag == UNDETERMINED
    assert v.evidence["grid_tried"] > 2000


def test_grid_search_is_seeded():
    degenerate = (Mat.unit(3, 0, 0), Mat.unit(3, 1, 1), Mat.unit(3, 0, 1) + Mat.unit(3, 1, 0))
    a = lorentz_certificate(SymSpace(3, degenerate), seed=5)
    b = lorentz_certificate(SymSpace(3, degenerate), seed=5)
    assert a == b


def test_recheck_rejects_tampered_certificate():
    g = so(1, 3)
    rep, space = forms_for(g, standard_subalgebra(g, "so(1,2)"))
    v = lorentz_certificate(space)
    assert recheck_certificate(v, rep.operators)
    bad = LorentzVerdict(FOUND, v.certificate + Mat.unit(3, 0, 0), v.reason)
    assert not recheck_certificate(bad, rep.operators)


# V / W ------------------------------------------------------------------------------

def test_vw_rank_one():
    g = so(1, 4)
    h = standard_subalgebra(g, "so(1,3)")
    u = (h.space & iwasawa_of(g).n).basis()[0]
    vw = vw_subspaces(g, h, u)
    assert vw.codim_V == 1 and vw.dim_W_mod_h == 1 and not vw.degenerate
    assert h.space.issubspace(vw.V)


def test_vw_degenerate_branch():
    g = so(1, 3)
    whole = make_subalg(g, [[int(i == j) for j in range(g.dim)] for i in range(g.dim)], "g")
    u = iwasawa_of(g).n.basis()[0]
    vw = vw_subspaces(g, whole, u)
    assert vw.degenerate and vw.dim_W_mod_h == 0


def test_vw_requires_normalizer():
    g = so(1, 3)
    h = standard_subalgebra(g, "so(1,2)")
    k = [0] * g.dim
    k[g.pairs.index((2, 3))] = 1  # rotation mixing the fixed axis into h's block
    with pytest.raises(ValueError):
        vw_subspaces(g, h, k)
