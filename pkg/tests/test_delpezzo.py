import pytest

from coxk3 import delpezzo
from coxk3.k3 import predict_delpezzo_cover, quadratic_realization


@pytest.mark.parametrize("k", range(5, 10))
def test_classes_satisfy_their_equations(k):
    K = delpezzo.canonical(k)
    for kind, (sq, dk) in (("lines", delpezzo.LINE), ("conics", delpezzo.CONIC)):
        for D in delpezzo.delpezzo_curves(k, kind):
            assert delpezzo.pair(D, D) == sq and delpezzo.pair(D, K) == dk


@pytest.mark.parametrize("k", range(5, 9))
def test_conics_form_one_orbit(k):
    h_minus_e1 = (1, -1) + (0,) * (k - 2)
    assert delpezzo.weyl_orbit(k, h_minus_e1) == set(delpezzo.delpezzo_curves(k, "conics"))


def test_form_and_bounds():
    assert delpezzo.form(3) == [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    assert delpezzo.canonical(5) == (-3, 1, 1, 1, 1)
    s = delpezzo.search_classes(6, *delpezzo.LINE)
    assert s.kind == "lines" and "coefficient of h" in s.bound
    assert s.degree_range[0] <= 0 <= 2 <= s.degree_range[1]


@pytest.mark.parametrize("k, kind", [(4, "lines"), (10, "lines"), (6, "cubics")])
def test_rejects_bad_input(k, kind):
    with pytest.raises(ValueError):
        delpezzo.delpezzo_curves(k, kind)


@pytest.mark.parametrize("k", range(5, 10))
def test_relations_are_quadratic_in_the_generators(k):
    pred = predict_delpezzo_cover(k)
    gens = pred.generator_degrees
    for r, pair in quadratic_realization(pred).items():
        i, j = pair
        assert tuple(a + b for a, b in zip(gens[i], gens[j])) == r
