import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxk3 import fixtures
from coxk3.cones import dual_cone_under_form
from coxk3.graded import GradedPresentation, Relation, canonical_class, ci_hilbert, count_monomials, homogeneity_check
from coxk3.k3 import (
    CoverSpec,
    RankTwoScenario,
    UnsupportedScenarioError,
    adjoin_cover,
    branch_genus,
    classification_table,
    eff_cone_rank2,
    eff_generator_type,
    h0_rank2,
    nef_cone_rank2,
    nikulin_counts,
    polyhedral_rank2,
    predict_rank2,
    symmetric_power_dim,
)
from coxk3.toric import cox_construction, hirzebruch

supported = st.one_of(
    st.tuples(st.sampled_from([0, -2]), st.sampled_from([0, -2]), st.integers(3, 9)),
    st.just((4, -4, 0)),
)
effective = st.tuples(st.integers(0, 6), st.integers(0, 6))


def _scenario(inv):
    return RankTwoScenario.standard(*inv)


def _eff_point(sc, xy):
    rays = eff_cone_rank2(sc).rays
    return tuple(xy[0] * a + xy[1] * b for a, b in zip(*rays))


def test_scenario_validation():
    with pytest.raises(ValueError):
        RankTwoScenario([[1, 0], [0, -2]])
    with pytest.raises(ValueError):
        RankTwoScenario([[-2, 0], [0, -2]])
    with pytest.raises(ValueError):
        RankTwoScenario([[2, 0, 0], [0, -2, 0], [0, 0, -2]])
    assert RankTwoScenario.standard(-2, 0, 3).invariants == (-2, 0, 3)


def test_unsupported_scenario():
    with pytest.raises(UnsupportedScenarioError):
        eff_cone_rank2(RankTwoScenario([[2, 3], [3, -2]]))
    with pytest.raises(UnsupportedScenarioError):
        predict_rank2(RankTwoScenario([[2, 3], [3, -2]]))


@given(supported, effective)
def test_h0_riemann_roch_bound(inv, xy):
    sc = _scenario(inv)
    w = _eff_point(sc, xy)
    h = h0_rank2(sc, w)
    if w != (0, 0):
        assert h >= sc.square(w) // 2 + 2
    if h == 1:
        assert w == (0, 0) or sc.square(w) < 0


@given(supported, effective, effective)
def test_h0_monotone(inv, xy, uv):
    sc = _scenario(inv)
    w, v = _eff_point(sc, xy), _eff_point(sc, uv)
    assert h0_rank2(sc, tuple(a + b for a, b in zip(w, v))) >= h0_rank2(sc, w)


def test_h0_rejects_non_effective():
    with pytest.raises(ValueError):
        h0_rank2(RankTwoScenario.standard(0, 0, 3), (-1, 0))


@given(supported)
def test_nef_and_eff_are_dual(inv):
    sc = _scenario(inv)
    eff, nef = eff_cone_rank2(sc), nef_cone_rank2(sc)
    assert dual_cone_under_form(nef, sc.G.matrix()) == eff
    assert all(sc.pair(n, e) >= 0 for n in nef.rays for e in eff.rays)


@given(st.integers(4, 12))
def test_gen2_relations_at_2u(k):
    sc = RankTwoScenario.standard(0, 0, k)
    pred = predict_rank2(sc)
    assert pred.generator_degrees.count((1, 0)) == 2 and pred.generator_degrees.count((0, 1)) == 2
    assert count_monomials(pred.Q, (2, 2)) - h0_rank2(sc, (2, 2)) == k * (k - 3) // 2


def test_symmetric_power_dim():
    assert [symmetric_power_dim(3, m) for m in range(4)] == [1, 3, 6, 10]


def test_polyhedral_examples():
    assert polyhedral_rank2([[0, 3], [3, 0]]).target == 0
    res = polyhedral_rank2([[2, 1], [1, -2]])
    assert res.polyhedral and res.to_json()["polyhedral"] is True


@pytest.mark.parametrize("a", range(0, 5))
@pytest.mark.parametrize("components", [1, 2])
def test_cover_is_homogeneous_with_trivial_canonical_class(a, components):
    base = GradedPresentation(cox_construction(hirzebruch(a)).Q)
    w1 = base.degrees[0] if components == 2 else None
    out = adjoin_cover(CoverSpec(base, None, components, w1))
    assert homogeneity_check(out)
    assert canonical_class(out) == (0, 0)
    assert out.ngens == base.ngens + 1
    assert out.relations[-1].label.startswith(f"T{base.ngens + 1}^2 - f")


def test_cover_with_explicit_relation_doubles_the_rational_variable():
    from coxk3.pipeline import bl3f4_pipeline

    p = bl3f4_pipeline().presentation
    spec = CoverSpec(p, None, 2, p.degrees[1])
    c = spec.rational_index
    out = adjoin_cover(spec)
    before = sorted(e[c] for e in p.relations[0].poly.support)
    after = sorted(e[c] for e in out.relations[0].poly.support)
    assert any(before) and after == [2 * x for x in before]
    assert homogeneity_check(out)
    assert canonical_class(out) == (0,) * p.grading_rank


def test_cover_spec_validation():
    base = GradedPresentation(cox_construction(fixtures.fan_F0()).Q)
    with pytest.raises(ValueError):
        CoverSpec(base, None, 3)
    with pytest.raises(ValueError):
        CoverSpec(base, None, 2)
    with pytest.raises(ValueError):
        CoverSpec(base, None, 2, (5, 5))
    with pytest.raises(ValueError):
        CoverSpec(base, (2, 2), 1)


def test_branch_genus():
    assert branch_genus(8, 1) == 9
    assert branch_genus(8, 2) == 10
    assert branch_genus(5, 2) == 7
    with pytest.raises(ValueError):
        branch_genus(8, 3)
    with pytest.raises(ValueError):
        branch_genus(8, 2, (-3, 2))


def test_table_range_and_json():
    with pytest.raises(ValueError):
        classification_table(6)
    row = classification_table(3)[0].to_json()
    assert row["lattice"] == "U+A1" and row["two_elementary"] == [3, 1, 1]
    assert classification_table(4)[1].lattice == "U(2)+A1^2"


def test_eff_generator_types_and_counts():
    assert eff_generator_type(1) == "ample divisor"
    assert eff_generator_type(7) == "(-2)-curves"
    with pytest.raises(ValueError):
        eff_generator_type(20)
    with pytest.raises(ValueError):
        nikulin_counts(2)


def test_k3_model_hilbert_function_matches_h0():
    # five generators, one relation in degree 3u
    sc = RankTwoScenario.standard(0, 0, 3)
    pred = predict_rank2(sc)
    pres = GradedPresentation(pred.Q, [Relation(generic_degree=d) for d in pred.relation_degrees])
    assert count_monomials(pred.Q, (3, 3)) == 30
    for m in range(1, 7):
        assert ci_hilbert(pres, (m, m)) == h0_rank2(sc, (m, m))
