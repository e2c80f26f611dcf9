import json

import pytest

from coxk3 import serialize
from coxk3.graded import canonical_class, homogeneity_check, is_complete_intersection
from coxk3.pipeline import bl3f4_pipeline
from coxk3.poly import parse_polynomial


def test_bl3f4_pipeline():
    p = bl3f4_pipeline()
    assert p.v_inf == (0, 1, 0)
    assert str(p.relation) == "T2*T4 - T3*T6 - T7*T8"
    assert p.f0 == parse_polynomial("T7 - T2*T4 + T3*T6", 7)
    assert homogeneity_check(p.presentation)
    assert is_complete_intersection(p.presentation)
    assert len(canonical_class(p.presentation)) == p.presentation.grading_rank == 5


def test_presentation_json_round_trip():
    p = bl3f4_pipeline().presentation
    text = serialize.dumps(serialize.presentation_out(p))
    again = serialize.presentation_in(json.loads(text))
    assert again.Q == p.Q and str(again.relations[0].poly) == str(p.relations[0].poly)


def test_serialize_rejects_garbage():
    with pytest.raises(ValueError):
        serialize.matrix_in([[1, "x"]])
    with pytest.raises(ValueError):
        serialize.matrix_in("1 2")
    with pytest.raises(ValueError):
        serialize.presentation_in({"relations": []})
    with pytest.raises(ValueError):
        serialize.fan_in({"rays": [[1, 0]]})
    assert serialize.vector_in(["1", 2]) == (1, 2)
