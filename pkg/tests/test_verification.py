import dataclasses
import json

import pytest

from lorentzhom import verification as ver
from lorentzhom.catalog import iwasawa_of, so, standard_subalgebra
from lorentzhom.forms import make_subalg


@pytest.mark.parametrize("k", [2, 3, 5])
def test_lemma_passes(k):
    r = ver.check_lemma_std_rep(k)
    assert r.passed, r.certificate
    assert r.certificate["positive_weight"] == 1
    assert len(r.certificate["W"]) == 1


def test_lemma_rejects_k1():
    with pytest.raises(ValueError):
        ver.check_lemma_std_rep(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_prop_so1n(n):
    r = ver.check_prop_so1n(n)
    assert r.passed, r.certificate
    assert ver.revalidate(r)
    if n == 2:
        assert r.certificate["killing_signature"] == "(2,1,0)"
        assert r.certificate["forms"][1]["acting"] == "g"


@pytest.mark.parametrize("n", [3, 4])
def test_root_data_identities_parabolics_theorem(n):
    for check in (ver.check_root_data, ver.check_proof_identities,
                  ver.check_parabolics, ver.check_thm_so2n):
        r = check(n)
        assert r.passed, (r.check_name, r.certificate)
    mults = ver.check_root_data(n).certificate["multiplicities"]
    assert mults == [1, n - 2, n - 2, 1]


def test_thm_records_consistency_for_even_n_only():
    assert ver.check_thm_so2n(3).certificate["consistency"] == "skipped: n odd"
    c = ver.check_thm_so2n(4).certificate["consistency"]
    assert c["h"] == "su(1,2)" and c["verdict"] == "none"


@pytest.mark.parametrize("check", [ver.check_root_data, ver.check_proof_identities,
                                   ver.check_parabolics, ver.check_thm_so2n])
def test_rank_two_checks_reject_small_n(check):
    with pytest.raises(ValueError):
        check(2)


def test_prop_rejects_small_n():
    with pytest.raises(ValueError):
        ver.check_prop_so1n(1)


def _split(g, name):
    h = standard_subalgebra(g, name)
    return make_subalg(g, (h.space & iwasawa_of(g).a).basis(), "t")


def test_cor_A_passes_on_standard_pairs():
    g = so(1, 4)
    assert ver.check_cor_so1k_A(g, "so(1,3)", _split(g, "so(1,3)")).passed
    g = so(2, 4)
    assert ver.check_cor_so1k_A(g, "so(1,4)", _split(g, "so(1,4)")).passed


def test_cor_A_fails_without_minkowski_form():
    g = so(2, 4)
    r = ver.check_cor_so1k_A(g, "su(1,2)", _split(g, "su(1,2)"))
    assert r.status == ver.FAIL
    assert r.certificate["items"]["minkowski_form_exists"] is False


def test_cor_A_rejects_zero_t():
    g = so(1, 3)
    with pytest.raises(ValueError):
        ver.check_cor_so1k_A(g, "so(1,2)", make_subalg(g, [], "0"))


def test_cor_N_passes_and_revalidates():
    g = so(2, 5)
    u = ver._unipotent_in_h(g, "so(1,5)")
    r = ver.check_cor_so1k_N(g, "so(1,5)", u)
    assert r.passed, r.certificate
    assert r.certificate["codim_V"] == 1 and r.certificate["dim_W_mod_h"] == 1
    assert ver.revalidate(r)


def test_cor_N_rejects_zero_u():
    g = so(1, 3)
    with pytest.raises(ValueError):
        ver.check_cor_so1k_N(g, "so(1,2)", [0] * g.dim)


def test_cor_N_fails_when_u_does_not_normalize():
    g = so(1, 3)
    # a nilpotent outside h that moves the fixed axis
    h = standard_subalgebra(g, "so(1,2)")
    u = next(v for v in iwasawa_of(g).n.basis() if not h.space.contains(v))
    r = ver.check_cor_so1k_N(g, "so(1,2)", u)
    assert r.status == ver.FAIL
    assert r.certificate["items"]["u_normalizes_h"] is False


def test_revalidate_rejects_tampering():
    r = ver.check_thm_so2n(3)
    assert ver.revalidate(r)
    cert = json.loads(json.dumps(r.certificate))
    entry = cert["forms"][0]
    entry["matrix"][0][0] = str(int(entry["matrix"][0][0]) + 1)
    bad = dataclasses.replace(r, certificate=cert)
    assert not ver.revalidate(bad)
    cert2 = json.loads(json.dumps(r.certificate))
    cert2["forms"][0]["signature"] = "(1,3,0)"
    assert not ver.revalidate(dataclasses.replace(r, certificate=cert2))


def test_properties_small():
    r = ver.check_properties(so(1, 3), triples=5, congruences=10, nilpotents=3)
    assert r.passed, r.certificate


def test_run_all_small_and_deterministic():
    a = ver.run_all(3)
    b = ver.run_all(3)
    assert [x.to_dict() for x in a] == [x.to_dict() for x in b]
    s = ver.summarize(a)
    assert s["status"] == ver.PASS and s["pass"] == s["total"] == len(a)
    names = {r.check_name for r in a}
    assert names == set(ver.ANCHORS)
    json.dumps([r.to_dict() for r in a])


def test_run_all_rejects_small_max_n():
    with pytest.raises(ValueError):
        ver.run_all(2)


def test_summarize_precedence():
    mk = lambda s: ver.CheckReport("x", {}, s, "")
    assert ver.summarize([mk(ver.PASS), mk(ver.UNDETERMINED)])["status"] == ver.UNDETERMINED
    assert ver.summarize([mk(ver.FAIL), mk(ver.UNDETERMINED)])["status"] == ver.FAIL
    assert ver.summarize([])["status"] == ver.PASS


def test_jsonable_refuses_unknown():
    with pytest.raises(TypeError):
        ver.jsonable(object())
    with pytest.raises(TypeError):
        ver.jsonable(0.5)
