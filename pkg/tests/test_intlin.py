from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from coxk3.intlin import (
    DegenerateFormError,
    GramForm,
    brute_force_represents,
    gale_dual,
    hermite_normal_form,
    parse_form,
    parse_matrix,
    represents,
    signature,
    smith_normal_form,
    two_elementary,
    unimodular_row_equivalent,
)
from coxk3.intlin.matrix import (
    determinant,
    is_surjective,
    kernel_rows,
    matmul,
    matvec,
    primitive,
    rank,
    unimodular_completion,
)

small = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


# --- Smith / Hermite ---------------------------------------------------------


@pytest.mark.parametrize("M, diag", [
    ([[2, 0], [0, -2]], [2, 2]),
    ([[0, 2], [2, 0]], [2, 2]),
    ([[0, 1], [1, 0]], [1, 1]),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
])
def test_smith_examples(M, diag):
    assert smith_normal_form(M).invariant_factors == diag


@given(matrices())
def test_smith_decomposition_property(M):
    snf = smith_normal_form(M)
    assert matmul(matmul(snf.U, M), snf.V) == snf.D
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1
    d = snf.invariant_factors
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    assert snf.rank == rank(M)


@given(matrices())
def test_hermite_spans_same_row_lattice(M):
    H = hermite_normal_form(M)
    assert len(H) == rank(M)
    assert rank(H) == len(H)
    assert hermite_normal_form(H) == H
    # the row lattices agree, so the kernels do too
    kh, km = kernel_rows(H, len(M[0])), kernel_rows(M)
    assert (kh and hermite_normal_form(kh)) == (km and hermite_normal_form(km))


# --- kernels and Gale duality --------------------------------------------------


def test_kernel_examples():
    assert kernel_rows([[1, 1]]) in ([[1, -1]], [[-1, 1]])
    assert kernel_rows([[1, 0], [0, 1]]) == []


@given(matrices())
def test_kernel_rows_are_kernel(M):
    K = kernel_rows(M)
    n = len(M[0])
    assert len(K) == n - rank(M)
    for v in K:
        assert matvec(M, v) == [0] * len(M)


@pytest.mark.parametrize("P, Q", [
    ([[1, 0, -1, 0], [0, 1, 0, -1]], [[1, 0, 1, 0], [0, 1, 0, 1]]),
    ([[1, 0, -1, 0], [0, 1, 4, -1]], [[1, 0, 1, 0], [0, 1, 0, 1]]),
])
def test_gale_dual_examples(P, Q):
    G = gale_dual(P)
    assert matmul(G, [list(r) for r in zip(*P)]) == [[0] * len(P) for _ in G]
    if P[1][2] == 0:
        assert unimodular_row_equivalent(G, Q)


def test_gale_dual_F4_has_degree_w1_plus_4w2():
    # rays (1,0), (0,1), (-1,4), (0,-1): v1 + v3 = 4 v2, so T4 has degree w1 + 4 w2
    G = gale_dual([[1, 0, -1, 0], [0, 1, 4, -1]])
    assert unimodular_row_equivalent(G, [[1, 0, 1, 4], [0, 1, 0, 1]])


@given(matrices(3, 6))
def test_gale_dual_is_surjective_and_annihilates(P):
    assume(is_surjective(P))
    Q = gale_dual(P)
    assert is_surjective(Q)
    assert len(Q) == len(P[0]) - len(P)
    for row in Q:
        assert all(sum(a * b for a, b in zip(row, prow)) == 0 for prow in P)


def test_unimodular_row_equivalence_examples():
    Q = [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert unimodular_row_equivalent(Q, [[-x for x in r] for r in Q])
    assert unimodular_row_equivalent(Q, [[1, 1, 1, 1], [0, 1, 0, 1]])
    assert not unimodular_row_equivalent(Q, [[1, 0, 1, 4], [0, 1, 0, 1]])


@given(st.lists(small, min_size=2, max_size=5))
def test_unimodular_completion(v):
    assume(any(v))
    v = list(primitive(v))
    U = unimodular_completion(v)
    assert abs(determinant(U)) == 1
    assert matvec(U, v) == [1] + [0] * (len(v) - 1)


def test_parse_matrix():
    assert parse_matrix("0 3; 3 0") == [[0, 3], [3, 0]]
    assert parse_matrix("1,2;3,4") == [[1, 2], [3, 4]]


# --- forms -------------------------------------------------------------------------


@pytest.mark.parametrize("expr, sig", [("U", (1, 1)), ("(2)+A1^2", (1, 2)), ("U+A1^3", (1, 4)), ("E8", (0, 8))])
def test_signature(expr, sig):
    assert signature(parse_form(expr)) == sig


def test_signature_of_degenerate_form_raises():
    with pytest.raises(DegenerateFormError):
        signature([[1, 1], [1, 1]])


@pytest.mark.parametrize("expr, inv", [
    ("U", (2, 0, 0)),
    ("U(2)", (2, 2, 0)),
    ("(2)+A1", (2, 2, 1)),
    ("U+A1", (3, 1, 1)),
    ("U(2)+A1^3", (5, 5, 1)),
])
def test_two_elementary(expr, inv):
    t = two_elementary(parse_form(expr))
    assert (t.rank, t.a, t.delta) == inv


def test_not_two_elementary():
    assert two_elementary(parse_form("A2")) is None
    assert two_elementary(GramForm([[2, 0], [0, -6]])) is None


def test_parse_form_grammar():
    assert parse_form("U(2)").matrix() == [[0, 2], [2, 0]]
    assert parse_form("(2)⊕A1").matrix() == [[2, 0], [0, -2]]
    assert parse_form("E8").det == 1
    assert parse_form("A1^3").rank == 3
    with pytest.raises(ValueError):
        parse_form("V")


def test_gramform_validation():
    with pytest.raises(ValueError):
        GramForm([[1, 2], [3, 4]])
    g = GramForm([[0, 1], [1, 0]])
    assert g.even and g.det == -1 and g.square((1, 1)) == 2


# --- binary forms --------------------------------------------------------------------


def test_represents_examples():
    assert represents(GramForm([[0, 3], [3, 0]]), 0).witness == (1, 0)
    w = represents(GramForm([[4, 0], [0, -4]]), 0).witness
    assert w is not None and GramForm([[4, 0], [0, -4]]).square(w) == 0
    g = GramForm([[2, 0], [0, -6]])
    assert not represents(g, 0) and not represents(g, -2)
    assert represents(GramForm([[2, 1], [1, -2]]), -2).witness == (0, 1)


def test_represents_pell_type():
    # x^2 - 7 y^2 = -1 has no solution; x^2 - 2 y^2 = -1 does
    assert not represents(GramForm([[2, 0], [0, -14]]), -2)
    r = represents(GramForm([[2, 0], [0, -4]]), -2)
    assert r and GramForm([[2, 0], [0, -4]]).square(r.witness) == -2


even_hyperbolic = st.tuples(st.integers(-8, 8), st.integers(-12, 12), st.integers(-8, 8)).filter(
    lambda t: t[1] * t[1] - 4 * t[0] * t[2] > 0
)


@given(even_hyperbolic, st.sampled_from([0, -2]))
def test_represents_against_box_search(abc, target):
    a, b, c = abc
    G = GramForm([[2 * a, b], [b, 2 * c]])
    rep = represents(G, target)
    box = brute_force_represents(G, target, 30)
    if rep.found:
        assert G.square(rep.witness) == target
        assert rep.witness != (0, 0)
    if box is not None:
        assert rep.found
    elif rep.found:
        assert max(abs(x) for x in rep.witness) > 30


def test_represents_rejects_bad_input():
    with pytest.raises(ValueError):
        represents(GramForm([[2, 0], [0, 2]]), -2)


def test_fraction_free_diagonal():
    from coxk3.intlin.forms import diagonalize

    d = diagonalize([[0, 1], [1, 0]])
    assert sorted(x > 0 for x in d) == [False, True]
    assert all(isinstance(x, Fraction) for x in d)
