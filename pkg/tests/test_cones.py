import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxk3.cones import (
    Cone,
    dual_cone,
    dual_cone_under_form,
    from_inequalities,
    intersect,
    moving_cone,
    positive_hull,
)

vec2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5))
vec3 = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))


def test_positive_hull_drops_interior_generators():
    c = positive_hull([(1, 0), (0, 1), (1, 1), (2, 3)])
    assert c.rays == ((0, 1), (1, 0))
    assert c.pointed and c.dim == 2


def test_halfplane_and_whole_plane():
    half = positive_hull([(1, 0), (-1, 0), (0, 1)])
    assert not half.pointed
    assert len(half.lineality) == 1 and len(half.rays) == 1
    assert half.contains((5, 0)) and half.contains((-3, 2)) and not half.contains((0, -1))
    plane = positive_hull([(1, 0), (0, 1), (-1, -1)])
    assert len(plane.lineality) == 2 and plane.rays == ()


def test_zero_and_empty():
    assert positive_hull([(0, 0)]).is_zero
    assert positive_hull([], 3).is_zero
    with pytest.raises(ValueError):
        positive_hull([])


def test_dimension_cap():
    with pytest.raises(ValueError):
        positive_hull([tuple(int(i == j) for j in range(6)) for i in range(6)])


def test_intersect_quadrants():
    a = positive_hull([(1, 0), (1, 1)])
    b = positive_hull([(1, 1), (0, 1)])
    assert intersect(a, b).rays == ((1, 1),)
    c = positive_hull([(2, 1), (1, 2)])
    assert intersect(positive_hull([(1, 0), (0, 1)]), c) == c


def test_moving_cone_of_F0_and_F4():
    assert set(moving_cone([(1, 0), (0, 1), (1, 0), (0, 1)]).rays) == {(1, 0), (0, 1)}
    # F4 degrees: the moving cone is cut down by the ray w1 + 4 w2
    assert set(moving_cone([(1, 0), (0, 1), (1, 0), (1, 4)]).rays) == {(1, 0), (1, 4)}


def test_dual_of_first_quadrant_under_hyperbolic_form():
    c = positive_hull([(1, 0), (0, 1)])
    assert dual_cone_under_form(c, [[0, 1], [1, 0]]) == c
    assert set(dual_cone(positive_hull([(1, 0), (1, 2)])).rays) == {(0, 1), (2, -1)}


@given(st.lists(vec2, min_size=1, max_size=5))
def test_hull_contains_generators(vs):
    c = positive_hull(vs)
    assert all(c.contains(v) for v in vs)
    assert c.contains(c.interior_vector())


@given(st.lists(vec3, min_size=1, max_size=5))
def test_inequality_round_trip(vs):
    c = positive_hull(vs)
    eqs, ineqs = c.inequalities()
    assert from_inequalities(3, eqs, ineqs) == c


@given(st.lists(vec3, min_size=1, max_size=4))
def test_double_dual(vs):
    c = positive_hull(vs)
    assert dual_cone(dual_cone(c)) == c


@given(st.lists(vec2, min_size=1, max_size=4), st.lists(vec2, min_size=1, max_size=4), vec2)
def test_intersection_membership(a, b, x):
    ca, cb = positive_hull(a), positive_hull(b)
    assert intersect(ca, cb).contains(x) == (ca.contains(x) and cb.contains(x))


def test_cone_json():
    js = positive_hull([(1, 0), (0, 1)]).to_json()
    assert js == {"ambient_dim": 2, "rays": [[0, 1], [1, 0]], "lineality": [], "pointed": True}
    assert isinstance(Cone(2, ()), Cone)
