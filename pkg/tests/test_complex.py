import pytest
from hypothesis import assume, given

import oracle
from conftest import FIXTURES, presentations
from stringhh.complex import (
    MINUS,
    PLUS,
    ZERO,
    cochain_basis,
    cochain_complex,
    delta_matrix,
    normalize,
    shift_minus,
    shift_plus,
    shift_witness,
)
from stringhh.presentation import classify, parse_presentation


def labels(basis):
    return [b.label() for b in basis]


def test_e5_bases():
    p = FIXTURES["E5"]
    assert labels(cochain_basis(p, 1)) == ["(a1 | a1)", "(a2 | a2)", "(a3 | a3)", "(b | b)", "(a4 | a4)", "(g | g)"]
    assert labels(cochain_basis(p, 2)) == ["(a2 a3 | b)"]
    assert labels(cochain_basis(p, 3)) == ["(a1 b a4 | g)"]
    assert labels(cochain_basis(p, 4)) == ["(a1 a2 a3 a4 | g)"]
    assert cochain_basis(p, 5) == ()


def test_a2_degree_zero():
    p = FIXTURES["A2"]
    assert labels(cochain_basis(p, 0)) == ["(e_1 | e_1)", "(e_2 | e_2)"]
    assert delta_matrix(p, 0).dense() == [[-1, 1]]


def test_e5_higher_deltas_vanish():
    p = FIXTURES["E5"]
    assert (delta_matrix(p, 1).rows, delta_matrix(p, 1).cols) == (1, 6)
    for n in (1, 2, 3, 4):
        assert delta_matrix(p, n).is_zero()


def test_empty_degree_shapes():
    p = FIXTURES["E5"]
    d4 = delta_matrix(p, 4)
    assert (d4.rows, d4.cols) == (0, 1)
    assert cochain_complex(p).dim(7) == 0


def test_tri_types_e5():
    p = FIXTURES["E5"]
    assert {b.tri_type for b in cochain_basis(p, 0)} == {ZERO}
    assert {b.tri_type for b in cochain_basis(p, 1)} == {MINUS}
    assert cochain_basis(p, 2)[0].tri_type == ZERO


def test_sd3_shift_plus_vanishes():
    cx = cochain_complex(FIXTURES["SD3"])
    elem = next(b for b in cx.basis(2) if b.label() == "(a b | a d)")
    assert elem.tri_type == MINUS
    assert shift_plus(cx, elem).is_zero()
    phi = cx.cochain(2, {elem.key: 1})
    assert normalize(phi, "leq").is_zero()


def test_sd3m_shift_minus_vanishes():
    cx = cochain_complex(FIXTURES["SD3M"])
    elem = next(b for b in cx.basis(2) if b.label() == "(a b | d b)")
    assert elem.tri_type == PLUS
    assert shift_minus(cx, elem).is_zero()


def test_g4_shifts_are_signed_single_terms():
    cx = cochain_complex(FIXTURES["G4"])
    f = next(b for b in cx.basis(2) if b.label() == "(a0 a1 | a0 d)")
    g = next(b for b in cx.basis(2) if b.label() == "(a1 a2 | d a2)")
    assert (f.tri_type, g.tri_type) == (MINUS, PLUS)
    assert shift_plus(cx, f) == cx.cochain(2, {g.key: -1})
    assert shift_minus(cx, g) == cx.cochain(2, {f.key: -1})
    assert shift_witness(cx, f) == cx.cochain(1, {cx.pair("a1", "d"): 1})
    ff = cx.cochain(2, {f.key: 1})
    assert ff - cx.delta(shift_witness(cx, f)) == shift_plus(cx, f)
    gg = cx.cochain(2, {g.key: 1})
    assert gg - cx.delta(shift_witness(cx, g)) == shift_minus(cx, g)
    # the two shifts cancel the other summand
    assert normalize(ff + gg, "leq").is_zero()
    assert normalize(ff + gg, "geq").is_zero()


def test_shift_preconditions():
    cx = cochain_complex(FIXTURES["E5"])
    zero_type = cx.basis(2)[0]
    with pytest.raises(ValueError):
        shift_plus(cx, zero_type)
    with pytest.raises(ValueError):
        shift_minus(cx, zero_type)
    with pytest.raises(ValueError):
        shift_plus(cx, cx.basis(1)[0])


def test_normalize_fixes_zero_type_and_degree_one():
    cx = cochain_complex(FIXTURES["E5"])
    phi = cx.basis_cochain(2, 0)
    assert normalize(phi, "leq") == phi == normalize(phi, "geq")
    psi = cx.basis_cochain(1, 3)
    assert normalize(psi, "leq") == psi
    with pytest.raises(ValueError):
        normalize(phi, "sideways")


def test_cochain_helpers():
    cx = cochain_complex(FIXTURES["E5"])
    f = cx.cochain(2, {cx.pair("a2 a3", "b"): 3})
    assert f(cx.path("a2", "a3")) == {cx.path("b"): 3}
    assert (f - f).is_zero()
    assert (2 * f).vector() == [6]
    assert f.support() == [("a2 a3", "b", 3)]
    with pytest.raises(KeyError):
        cx.cochain(2, {cx.pair("a2 a3", "g"): 1})
    u = cx.unit()
    assert cx.is_cocycle(u)


def test_vertex_coboundary_e5():
    cx = cochain_complex(FIXTURES["E5"])
    e1 = cx.cochain(0, {cx.pair("1", "1"): 1})
    d = cx.delta(e1)
    # e_1 sits at the start of a1 and g
    assert d == cx.cochain(1, {cx.pair("a1", "a1"): -1, cx.pair("g", "g"): -1})


@given(presentations())
def test_delta_squares_to_zero(p):
    cx = cochain_complex(p)
    for n in range(cx.top_degree + 1):
        assert (delta_matrix(p, n + 1) @ delta_matrix(p, n)).is_zero()


@given(presentations(max_vertices=4, max_arrows=5))
def test_delta_matches_brute_force(p):
    cx = cochain_complex(p)
    for n in range(cx.top_degree + 1):
        src = oracle.cochain_basis(p, n)
        tgt = oracle.cochain_basis(p, n + 1)
        assert len(src) == cx.dim(n) and len(tgt) == cx.dim(n + 1)
        col = {b: j for j, b in enumerate(src)}
        row = {b: i for i, b in enumerate(tgt)}

        def key(elem):
            c, v = elem.chain, elem.value
            return ((c.source, c.target, c.arrows), (v.source, v.target, v.arrows))

        perm_c = [col[key(b)] for b in cx.basis(n)]
        perm_r = [row[key(b)] for b in cx.basis(n + 1)]
        ref = oracle.delta(p, n)
        mine = delta_matrix(p, n)
        for i in range(mine.rows):
            for j in range(mine.cols):
                assert mine.entries.get((i, j), 0) == ref[perm_r[i], perm_c[j]]


@given(presentations())
def test_tri_partition_exact(p):
    cx = cochain_complex(p)
    for n in range(1, cx.top_degree + 1):
        for b in cx.basis(n):
            starts = b.value.arrows[0] == b.chain.arrows[0]
            ends = b.value.arrows[-1] == b.chain.arrows[-1]
            expected = MINUS if starts else PLUS if ends else ZERO
            assert b.tri_type == expected


@given(presentations(max_vertices=6, max_arrows=8))
def test_shift_identities_under_s3(p):
    assume(classify(p).s3)
    cx = cochain_complex(p)
    for n in range(2, cx.top_degree + 1):
        for b in cx.basis(n):
            if b.tri_type == ZERO:
                continue
            f = cx.cochain(n, {b.key: 1})
            shifted = shift_plus(cx, b) if b.tri_type == MINUS else shift_minus(cx, b)
            assert f - cx.delta(shift_witness(cx, b)) == shifted


@given(presentations(max_vertices=6, max_arrows=8))
def test_normalized_support(p):
    assume(classify(p).s3)
    cx = cochain_complex(p)
    for n in range(2, cx.top_degree + 1):
        types = {b.key: b.tri_type for b in cx.basis(n)}
        phi = cx.from_vector(n, [(j + 1) % 3 for j in range(cx.dim(n))])
        assert all(types[k] != MINUS for k in normalize(phi, "leq").terms)
        assert all(types[k] != PLUS for k in normalize(phi, "geq").terms)


def test_shift_identity_needs_s3():
    # c has two non-vanishing predecessors a1 and b, so S3 fails and d h picks up (b a2 | b c)
    p = parse_presentation(
        "vertices: 0 1 2 3\narrow: a1 0 2\narrow: b 1 2\narrow: a2 2 3\narrow: c 2 3\n"
        "relation: a1 a2\nrelation: b a2\n"
    )
    assert not classify(p).s3
    cx = cochain_complex(p)
    elem = next(b for b in cx.basis(2) if b.label() == "(a1 a2 | a1 c)")
    f = cx.cochain(2, {elem.key: 1})
    residue = f - cx.delta(shift_witness(cx, elem)) - shift_plus(cx, elem)
    assert residue == cx.cochain(2, {cx.pair("b a2", "b c"): -1})
