import random
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lorentzhom.exact import poly
from lorentzhom.exact.linalg import (
    SignatureTriple,
    SpanSolver,
    Subspace,
    congruent_diagonalize,
    determinant,
    inverse,
    kernel,
    rank,
    signature,
    solve_linear,
    sym_from_coords,
)
from lorentzhom.exact.matrix import Mat, MatrixFormatError, as_rat


def rand_mat(rng, rows, cols, density=0.6, den=3):
    return Mat([[F(rng.randint(-4, 4), rng.randint(1, den)) if rng.random() < density else 0
                 for _ in range(cols)] for _ in range(rows)])


def to_sympy(m: Mat):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.tolist()])


def rand_sym(rng, n, den=3):
    a = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if rng.random() < 0.7:
                a[i][j] = a[j][i] = F(rng.randint(-4, 4), rng.randint(1, den))
    return Mat(a)


# matrices ---------------------------------------------------------------------

def test_as_rat_refuses_floats():
    with pytest.raises(TypeError):
        as_rat(0.5)
    with pytest.raises(TypeError):
        as_rat(True)
    assert as_rat("3/6") == F(1, 2)


def test_mat_basic_ops():
    a = Mat([[1, 2], [3, 4]])
    b = Mat([[0, 1], [1, 0]])
    assert (a @ b).tolist() == [[2, 1], [4, 3]]
    assert a.T.tolist() == [[1, 3], [2, 4]]
    assert a.bracket(b) == a @ b - b @ a
    assert (a - a).is_zero()
    assert Mat.identity(2) @ a == a
    assert a.trace() == 5
    assert hash(Mat([[1, 2], [3, 4]])) == hash(a)
    with pytest.raises(ValueError):
        Mat([[1, 2], [3]])
    with pytest.raises(ValueError):
        a @ Mat([[1, 2, 3]])


def test_text_round_trip():
    rng = random.Random(7)
    for _ in range(20):
        m = rand_mat(rng, rng.randint(0, 4), rng.randint(1, 4))
        assert Mat.from_text(m.to_text()) == m


@pytest.mark.parametrize("text, line, column", [
    ("2 x\n1 2\n3 4\n", 1, 3),
    ("2 2\n1 2\n3 q\n", 3, 3),
    ("2 2\n1 2\n3\n", 3, 1),
    ("2 2\n1 1/0\n0 1\n", 2, 3),
    ("", 1, 0),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(MatrixFormatError) as exc:
        Mat.from_text(text)
    assert (exc.value.line, exc.value.column) == (line, column)


# solving ----------------------------------------------------------------------

def test_rank_kernel_solve_against_sympy():
    rng = random.Random(1)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 7)
        m = rand_mat(rng, r, c)
        sm = to_sympy(m)
        assert rank(m) == sm.rank()
        ker = kernel(m)
        assert len(ker) == len(sm.nullspace())
        for v in ker:
            assert (m @ v).is_zero()
        # rank-nullity
        assert rank(m) + len(ker) == c
        b = m @ Mat.column([rng.randint(-3, 3) for _ in range(c)])
        x = solve_linear(m, b)
        assert x is not None and m @ x == b


def test_solve_inconsistent():
    a = Mat([[1, 1], [2, 2]])
    assert solve_linear(a, Mat.column([1, 3])) is None


def test_inverse_and_determinant_against_sympy():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = rand_mat(rng, n, n, density=0.8)
        d = determinant(m)
        assert d == F(str(to_sympy(m).det()))
        if d:
            assert m @ inverse(m) == Mat.identity(n)
        else:
            with pytest.raises(ZeroDivisionError):
                inverse(m)


def test_subspace_dimension_formula():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 7)
        u = Subspace([rand_mat(rng, 1, n).row(0) for _ in range(rng.randint(0, n))], n)
        w = Subspace([rand_mat(rng, 1, n).row(0) for _ in range(rng.randint(0, n))], n)
        inter = u & w
        assert (u + w).dim + inter.dim == u.dim + w.dim
        assert inter.issubspace(u) and inter.issubspace(w)


def test_subspace_equality_is_basis_independent():
    a = Subspace([[1, 1, 0], [0, 1, 1]], 3)
    b = Subspace([[1, 2, 1], [F(1, 2), 0, F(-1, 2)]], 3)
    assert a == b
    assert a != Subspace([[1, 0, 0]], 3)


def test_span_solver():
    s = SpanSolver([[1, 2, 0], [0, 1, 1]], 3)
    assert s.express([2, 5, 1]) == [2, 1]
    assert s.express([1, 0, 0]) is None
    with pytest.raises(ValueError):
        SpanSolver([[1, 1], [2, 2]], 2)


# signatures -------------------------------------------------------------------

@pytest.mark.parametrize("diag, sig", [
    ([-1, 1, 1], (2, 1, 0)),
    ([1, -1, -1], (1, 2, 0)),
    ([0, 0, 3], (1, 0, 2)),
    ([F(1, 7), -5, 0, 0], (1, 1, 2)),
])
def test_signature_examples(diag, sig):
    assert signature(Mat.diag(diag)) == SignatureTriple(*sig)


def test_signature_zero_diagonal():
    assert signature(Mat([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(Mat([[0, 1, 0], [1, 0, 0], [0, 0, 0]])) == (1, 1, 1)


def test_minkowski_predicate():
    assert SignatureTriple(3, 1, 0).is_minkowski
    assert SignatureTriple(1, 3, 0).is_minkowski
    assert not SignatureTriple(2, 2, 0).is_minkowski
    assert not SignatureTriple(3, 1, 1).is_minkowski
    assert not SignatureTriple(1, 0, 0).is_minkowski
    assert str(SignatureTriple(2, 1, 0)) == "(2,1,0)"


def _descartes_signature(m: Mat):
    """Oracle: the characteristic polynomial is real-rooted, so Descartes' rule is exact."""
    n = m.rows
    t = sympy.symbols("t")
    coeffs = sympy.Poly(to_sympy(m).charpoly(t).as_expr(), t).all_coeffs()[::-1]
    zero = next(i for i, c in enumerate(coeffs) if c != 0)
    rest = [c for c in coeffs[zero:] if c != 0]
    pos = sum(1 for a, b in zip(rest, rest[1:]) if (a > 0) != (b > 0))
    return (pos, n - zero - pos, zero)


def test_signature_against_charpoly_oracle():
    rng = random.Random(4)
    for _ in range(40):
        m = rand_sym(rng, rng.randint(1, 6))
        assert tuple(signature(m)) == _descartes_signature(m)


def test_congruent_diagonalize_round_trip():
    rng = random.Random(5)
    for _ in range(40):
        m = rand_sym(rng, rng.randint(1, 7))
        d, p = congruent_diagonalize(m)
        assert p.T @ m @ p == d
        assert all(d[i, j] == 0 for i in range(d.rows) for j in range(d.cols) if i != j)
        assert determinant(p) != 0


@st.composite
def congruence_cases(draw):
    n = draw(st.integers(1, 10))
    small = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    coords = draw(st.lists(small, min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2))
    p = draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))
    return sym_from_coords(coords, n), Mat(p)


@settings(max_examples=100, deadline=None, derandomize=True)
@given(congruence_cases())
def test_sylvester_invariance(case):
    s, p = case
    if determinant(p) == 0:
        p = p + Mat.identity(p.rows).scale(11)
    if determinant(p) == 0:
        return
    assert signature(p.T @ s @ p) == signature(s)


# polynomials ------------------------------------------------------------------

def test_poly_arithmetic():
    p = poly.from_roots([1, 2, F(1, 2)])
    q, r = poly.divmod_poly(p, poly.from_roots([2]))
    assert r == [] and q == poly.from_roots([1, F(1, 2)])
    assert poly.gcd_poly(p, poly.from_roots([2, 3])) == poly.from_roots([2])
    assert poly.is_squarefree(p)
    assert not poly.is_squarefree(poly.mul(p, p))
    assert poly.squarefree_part(poly.mul(p, p)) == p


def test_interpolation_recovers_polynomial():
    p = [F(3), F(-1, 2), F(0), F(2)]
    xs = [0, 1, 2, 5]
    assert poly.interpolate(xs, [poly.evaluate(p, x) for x in xs]) == p


def test_sturm_counts_match_known_roots():
    p = poly.from_roots([-3, F(-1, 2), 1, 1, 4])
    assert poly.count_real_roots(p) == 4
    assert poly.count_real_roots(p, 0, None) == 2
    assert poly.count_real_roots(p, -3, 1) == 2  # (-3, 1] holds -1/2 and 1
    assert poly.count_real_roots([1, 0, 1]) == 0
    assert poly.all_roots_real(p)
    assert not poly.all_roots_real([1, 0, 1])


def test_isolation_and_separating_points():
    roots = [F(-7, 3), 0, F(1, 5), 2]
    p = poly.from_roots(roots)
    ivs = poly.isolate_real_roots(p)
    assert len(ivs) == 4
    for (lo, hi), r in zip(ivs, roots):
        assert lo < r < hi
    pts = poly.separating_points(p)
    assert len(pts) == 5
    for x in pts:
        assert poly.evaluate(p, x) != 0
    # one point in each arc between consecutive roots
    bounds = [None] + roots + [None]
    for x, lo, hi in zip(pts, bounds, bounds[1:]):
        assert (lo is None or lo < x) and (hi is None or x < hi)


def test_charpoly_against_sympy():
    rng = random.Random(6)
    t = sympy.symbols("t")
    for _ in range(10):
        n = rng.randint(1, 5)
        m = rand_mat(rng, n, n)
        expected = sympy.Poly(to_sympy(m).charpoly(t).as_expr(), t).all_coeffs()[::-1]
        assert poly.charpoly(m) == [F(str(c)) for c in expected]


def test_sturm_oracle_killing_eigenvalue_signs():
    from lorentzhom.lie.algebra import make_so
    from lorentzhom.lie.roots import killing_form

    cp = poly.charpoly(killing_form(make_so(1, 2)))
    # one distinct positive and one distinct negative eigenvalue ...
    assert poly.count_real_roots(cp, 0, None) == 1
    assert poly.count_real_roots(cp, None, 0) == 1
    # ... with the positive one double: eigenvalues 2, 2, -2
    q, r = poly.divmod_poly(cp, poly.from_roots([2, 2]))
    assert r == [] and poly.count_real_roots(q, None, 0) == 1
