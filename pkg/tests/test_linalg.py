from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import FIXTURES
from stringhh.complex import delta_matrix
from stringhh.linalg import GF, QQ, Matrix, Mod, json_scalar, kernel_basis, rank, rref, solve_membership

small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    data = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_dense(data, QQ, cols=c)


def to_sympy(m: Matrix):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(str(m.entries.get((i, j), 0))))


def test_rank_examples():
    assert rank(Matrix.from_dense([[0] * 6])) == 0
    assert rank(Matrix.from_dense([[1, 0], [0, 1]])) == 2
    assert rank(delta_matrix(FIXTURES["E5"], 0)) == 4


def test_kernel_examples():
    zero = Matrix.from_dense([[0] * 6])
    assert kernel_basis(zero) == [[1 if i == j else 0 for i in range(6)] for j in range(6)]
    assert kernel_basis(Matrix.from_dense([[-1, 1]])) == [[1, 1]]
    assert kernel_basis(Matrix.from_dense([[1, 0], [0, 1]])) == []


def test_membership_examples():
    a2 = delta_matrix(FIXTURES["A2"], 0)
    assert solve_membership(a2, [3]) is not None
    assert solve_membership(Matrix.from_dense([[0, 0]]), [1]) is None
    with pytest.raises(ValueError):
        solve_membership(a2, [1, 2])


def test_e5_arrow_indicator_not_in_image():
    e5 = FIXTURES["E5"]
    d0 = delta_matrix(e5, 0)
    v = [0] * d0.rows
    v[3] = 1  # the basis pair (b | b)
    assert solve_membership(d0, v) is None


def test_empty_shapes():
    m = Matrix(0, 3, {})
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 3
    assert kernel_basis(Matrix(3, 0, {})) == []
    assert solve_membership(Matrix(2, 0, {}), [0, 0]) == []


def test_mod_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(1) / F(3) == F(5)
    assert F(Fraction(1, 2)) == F(4)
    assert F(-1) == F(6)
    assert not F(7)
    assert json_scalar(F(-1)) == 6
    assert json_scalar(Fraction(-3, 2)) == "-3/2"
    assert isinstance(F(2), Mod)


def test_matmul_and_matvec():
    a = Matrix.from_dense([[1, 2], [0, 1]])
    b = Matrix.from_dense([[1], [1]])
    assert (a @ b).dense() == [[3], [1]]
    assert a.matvec([1, 1]) == [3, 1]
    with pytest.raises(ValueError):
        a.matvec([1])


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == (0 if 0 in (m.rows, m.cols) else to_sympy(m).rank())


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_rref_matches_sympy(m):
    if not m.entries:
        return
    rows, pivots = rref(m)
    ref, ref_piv = to_sympy(m).rref()
    assert tuple(pivots) == ref_piv
    assert [[sympy.Rational(str(x)) for x in r] for r in rows] == ref.tolist()[: len(pivots)]


@given(matrices())
def test_kernel_sound_and_complete(m):
    ker = kernel_basis(m)
    assert len(ker) == m.cols - rank(m)
    for v in ker:
        assert not any(m.matvec(v))


@given(matrices(), st.lists(small, min_size=6, max_size=6))
def test_membership_agrees_with_augmented_rank(m, raw):
    v = raw[: m.rows]
    x = solve_membership(m, v)
    aug = m.hstack(Matrix.from_columns([v], m.rows))
    in_span = rank(aug) == rank(m)
    assert (x is not None) == in_span
    if x is not None:
        assert m.matvec(x) == [Fraction(a) for a in v]


@given(matrices(), st.sampled_from([3, 5, 7]))
def test_mod_p_rank_bounded_by_rational(m, p):
    mp = Matrix.from_dense(m.dense(), GF(p), cols=m.cols)
    assert rank(mp) <= rank(m)
    ker = kernel_basis(mp)
    assert len(ker) == m.cols - rank(mp)
    for v in ker:
        assert not any(mp.matvec(v))


@given(st.lists(st.lists(st.fractions(max_denominator=5).filter(lambda f: abs(f) < 5), min_size=3, max_size=3), min_size=1, max_size=4))
def test_fraction_entries(data):
    m = Matrix.from_dense(data)
    assert rank(m) == to_sympy(m).rank()
