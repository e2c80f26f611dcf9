import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxk3 import printed as pd
from coxk3.graded import (
    GradedPresentation,
    NonPointedGradingError,
    NotCompleteIntersectionError,
    Relation,
    canonical_class,
    ci_hilbert,
    count_monomials,
    find_identification,
    homogeneity_check,
    monomials_of_degree,
    pointedness_certificate,
    presentation_equivalent,
    standard_monomial_count,
)
from coxk3.intlin.matrix import rational_rank
from coxk3.poly import parse_polynomial

F0 = [[1, 0, 1, 0], [0, 1, 0, 1]]
P2 = [[1, 1, 1]]


def linear_algebra_dim(pres, w):
    """dim R_w as (#monomials) - rank of the degree-w part of the ideal."""
    mons = monomials_of_degree(pres.Q, w)
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for rel in pres.relations:
        d = rel.degree(pres.Q)
        shift = [a - b for a, b in zip(w, d)]
        for m in monomials_of_degree(pres.Q, shift):
            row = [0] * len(mons)
            for e, c in rel.poly.terms:
                row[index[tuple(a + b for a, b in zip(e, m))]] += c
            rows.append(row)
    return len(mons) - (rational_rank(rows) if rows else 0)


@pytest.mark.parametrize("Q, w, n", [
    (F0, (2, 2), 9),
    (F0, (3, 4), 20),
    (P2, (2,), 6),
    (P2, (-1,), 0),
    ([[1, 0, 1, 4], [0, 1, 0, 1]], (0, 1), 1),
])
def test_count_monomials(Q, w, n):
    assert count_monomials(Q, w) == n
    assert len(monomials_of_degree(Q, w)) == n


def test_non_pointed_grading():
    with pytest.raises(NonPointedGradingError):
        pointedness_certificate([[1, -1]])
    c = pointedness_certificate(F0)
    assert all(sum(a * b for a, b in zip(c, col)) > 0 for col in zip(*F0))


def test_conic_in_p2():
    pres = GradedPresentation(P2, ["T1*T2 - T3^2"])
    assert standard_monomial_count(pres, (2,)) == 5
    for d in range(6):
        assert ci_hilbert(pres, (d,), dim=1) == 2 * d + 1 == standard_monomial_count(pres, (d,))


def test_canonical_class_examples():
    assert canonical_class(GradedPresentation(F0)) == (-2, -2)
    assert canonical_class(GradedPresentation(P2)) == (-3,)
    # quartic K3 in P3
    assert canonical_class(GradedPresentation([[1, 1, 1, 1]], [Relation(generic_degree=(4,))])) == (0,)
    with pytest.raises(NotCompleteIntersectionError):
        canonical_class(GradedPresentation(F0, ["T1*T2 - T3*T4"]))


def test_inhomogeneous_relation_is_reported():
    pres = GradedPresentation(P2 + [[0, 1, 0]], ["T1*T2 - T3^2"])
    rep = homogeneity_check(pres)
    assert not rep and rep.checks[0].term_degrees == ((2, 1), (2, 0))
    assert pres.relation_degrees() == [None]
    js = rep.to_json()
    assert js["status"] == "fail" and js["relations"][0]["homogeneous"] is False


def test_relation_validation():
    with pytest.raises(ValueError):
        Relation()
    with pytest.raises(ValueError):
        Relation(poly=parse_polynomial("T1"), generic_degree=(1,))
    with pytest.raises(ValueError):
        GradedPresentation(P2, ["T4"])


def test_json_round_trip():
    pres = GradedPresentation(F0, ["T1*T2 - T3*T4", Relation(generic_degree=(2, 2), label="g")])
    again = GradedPresentation.from_json(pres.to_json())
    assert again == pres


def test_equivalence():
    a = GradedPresentation(pd.RHO2_I)
    assert presentation_equivalent(a, a)
    assert not presentation_equivalent(a, GradedPresentation(pd.RHO2_III))
    swapped = GradedPresentation([pd.RHO2_I[1], pd.RHO2_I[0]])
    U, perm = find_identification(a, swapped)
    assert U == [[0, 1], [1, 0]]
    assert sorted(perm) == list(range(a.ngens))


binomials = st.tuples(
    st.sampled_from([(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 2, 0)]),
    st.sampled_from([(0, 0, 1, 1), (0, 2, 0, 0), (0, 0, 0, 2), (1, 0, 0, 1)]),
    st.integers(1, 3),
)


@settings(max_examples=30)
@given(binomials, st.integers(2, 4))
def test_standard_monomials_match_linear_algebra(b, d):
    # everything has degree 2 in the standard grading of P3
    m1, m2, c = b
    f = parse_polynomial(f"{c}*" + "*".join(f"T{i + 1}^{x}" for i, x in enumerate(m1) if x), 4)
    f = f - parse_polynomial("*".join(f"T{i + 1}^{x}" for i, x in enumerate(m2) if x), 4)
    pres = GradedPresentation([[1, 1, 1, 1]], [Relation(poly=f)])
    assert standard_monomial_count(pres, (d,)) == linear_algebra_dim(pres, (d,))


def test_standard_monomials_two_relations_and_permutation():
    rels = ["T1*T4 - T2*T3", "T1*T3 - T2^2"]
    pres = GradedPresentation([[1, 1, 1, 1]], rels)
    for d in range(1, 5):
        expected = linear_algebra_dim(pres, (d,))
        assert standard_monomial_count(pres, (d,)) == expected
        for perm in itertools.islice(itertools.permutations(range(4)), 6):
            ren = [str(parse_polynomial(r, 4)) for r in rels]
            new = [
                "".join(f"T{perm[int(t[1:]) - 1] + 1}" if t.startswith("T") else t
                        for t in _tokens(r))
                for r in ren
            ]
            assert standard_monomial_count(GradedPresentation([[1, 1, 1, 1]], new), (d,)) == expected


def _tokens(text):
    import re

    return re.findall(r"T\d+|[^T]+", text)
