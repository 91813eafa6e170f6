import pytest

from lorentzhom.catalog import (
    CatalogError,
    canonical_name,
    iwasawa_of,
    list_catalog,
    maximal_unipotent,
    so,
    standard_subalgebra,
    su1k_basis,
    trivial_subalgebra,
)
from lorentzhom.exact.matrix import Mat
from lorentzhom.lie.roots import is_nilpotent_subalgebra


def _names(g):
    return [e.name for e in list_catalog(g)]


def test_rank_one_entries():
    g = so(1, 4)
    assert _names(g) == ["so(1,3)", "a", "n", "m", "min_parabolic"]
    for e in list_catalog(g):
        h = e.build(g)
        assert h.dim == e.expected_dim


def test_rank_two_entries_and_dimensions():
    g = so(2, 5)
    assert _names(g) == ["so(1,5)", "so(1,5)^s_alpha", "su(1,2)", "a", "n", "m",
                         "min_parabolic", "p_alpha", "p_beta"]
    for e in list_catalog(g):
        h = e.build(g)
        assert h.dim == e.expected_dim, e.name
        assert h.closure_certificate is not None


@pytest.mark.parametrize("p, q", [(3, 3), (2, 2), (0, 4), (1, 1)])
def test_unsupported_algebras_have_empty_catalog(p, q):
    assert list_catalog(so(p, q)) == []


def test_catalog_order_is_deterministic():
    assert _names(so(2, 6)) == _names(so(2, 6))


def test_unknown_name():
    with pytest.raises(CatalogError) as exc:
        standard_subalgebra(so(2, 4), "sp(1,1)")
    assert "known:" in str(exc.value)


def test_aliases():
    g = so(2, 6)
    assert canonical_name(g, "so(1,n)<so(2,n)") == "so(1,6)"
    assert canonical_name(g, "su(1,k) < so(2,2k)") == "su(1,3)"
    assert canonical_name(so(1, 5), "so(1,n-1)<so(1,n)") == "so(1,4)"
    assert canonical_name(g, "so(1,6)") == "so(1,6)"


@pytest.mark.parametrize("k", [1, 2, 3])
def test_su1k_is_unitary_algebra(k):
    size = 2 * k + 2
    basis = su1k_basis(k, size)
    assert len(basis) == (k + 1) ** 2 - 1
    # preserves the complex structure and the real Hermitian form of signature (2, 2k)
    j = Mat.zeros(size)
    for i in range(0, size, 2):
        j = j + Mat.unit(size, i + 1, i) - Mat.unit(size, i, i + 1)
    for x in basis:
        assert x.bracket(j).is_zero()
        assert x.trace() == 0


@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_su_entries_are_closed(n):
    g = so(2, n)
    h = standard_subalgebra(g, f"su(1,{n // 2})")
    assert h.dim == (n // 2 + 1) ** 2 - 1


@pytest.mark.parametrize("n", [4, 6, 8])
def test_maximal_unipotent_dimension(n):
    g = so(2, n)
    for name in (f"so(1,{n})", f"su(1,{n // 2})"):
        u = maximal_unipotent(standard_subalgebra(g, name))
        assert u.dim == n - 1, name
        assert is_nilpotent_subalgebra(g, u)


def test_maximal_unipotent_requires_split_part():
    g = so(2, 4)
    with pytest.raises(CatalogError):
        maximal_unipotent(standard_subalgebra(g, "m"))


def test_reflected_embedding_meets_a_in_other_kernel():
    g = so(2, 4)
    iw = iwasawa_of(g)
    a, b = iw.roots.alpha_beta()
    h = standard_subalgebra(g, "so(1,4)")
    hs = standard_subalgebra(g, "so(1,4)^s_alpha")
    t = (h.space & iw.a).basis()[0]
    ts = (hs.space & iw.a).basis()[0]

    def kills(v, root):
        x = iw.roots.space(root).basis()[0]
        return not any(g.bracket_coords(v, x))

    ab = tuple(x + y for x, y in zip(a, b))
    assert kills(t, ab) and not kills(t, b)
    assert kills(ts, b) and not kills(ts, ab)
    assert h.space != hs.space


def test_trivial_subalgebra():
    h = trivial_subalgebra(so(1, 3))
    assert h.dim == 0 and h.name == "0"
