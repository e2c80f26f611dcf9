import json

import pytest

from coxk3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def one(out):
    lines = out.strip().splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


def test_gale(capsys):
    code, out, _ = run(capsys, "gale", "--matrix", "1 0 -1 0; 0 1 4 -1")
    assert code == 0
    data = one(out)
    assert all(isinstance(x, str) for row in data["Q"] for x in row)


def test_cox_and_canonical(capsys):
    code, out, _ = run(capsys, "cox", "--fan", "builtin:F0")
    assert code == 0
    data = one(out)
    assert sorted(data["canonical_class"]) == [-2, -2]


def test_blowup_with_polynomial(capsys):
    code, out, _ = run(capsys, "blowup", "--fan", "P2", "--cone", "1,2", "--poly", "T1 + T2")
    assert code == 0
    data = one(out)
    assert data["v_inf"] == [1, 1] and data["admissibility"]["status"] == "pass"


def test_hilbert(capsys, tmp_path):
    f = tmp_path / "conic.json"
    f.write_text(json.dumps({"Q": [["1", "1", "1"]], "relations": [{"poly": "T1*T2 - T3^2"}]}))
    code, out, _ = run(capsys, "hilbert", "-i", str(f), "-w", "2")
    assert code == 0
    data = one(out)
    assert data["monomials"] == 6 and data["standard_monomials"] == 5


def test_rank2(capsys):
    code, out, _ = run(capsys, "rank2", "--gram", "0 3; 3 0", "-w", "1,1", "--predict")
    assert code == 0
    data = one(out)
    assert data["h0"]["value"] == 5 and data["provenance"] == "gen-2"
    code, out, err = run(capsys, "rank2", "--gram", "2 3; 3 -2")
    assert code == 0 and one(out)["effective_cone"] is None and "note" in err


def test_cover(capsys):
    code, out, _ = run(capsys, "cover", "--fan", "F4", "--components", "2")
    assert code == 0
    assert one(out)["canonical_class"] == [0, 0]


def test_dp_table_nikulin(capsys):
    assert one(run(capsys, "dp", "--k", "7")[1])["count"] == 27
    assert one(run(capsys, "dp", "--k", "6", "--kind", "conics")[1])["count"] == 10
    assert len(one(run(capsys, "table", "--rho", "2")[1])["rows"]) == 3
    assert one(run(capsys, "nikulin", "--rho", "3")[1])["count"] == 27


def test_validate_exit_codes(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"Q": [[1, 1, 1, 1]], "relations": [{"generic_degree": [4]}]}))
    code, out, _ = run(capsys, "validate", "-i", str(good))
    assert code == 0 and one(out)["canonical_class"] == [0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"Q": [[1, 1, 1], [0, 1, 0]], "relations": [{"poly": "T1*T2 - T3^2"}]}))
    code, out, _ = run(capsys, "validate", "-i", str(bad))
    assert code == 1 and one(out)["status"] == "fail"


@pytest.mark.parametrize("argv", [
    ["gale"],
    ["cox", "--fan", "nope"],
    ["hilbert", "--fan", "F0", "-w", "1"],
    ["hilbert", "--fan", "F0", "-w", "a,b"],
    ["validate", "-i", "/nonexistent.json"],
    ["rank2", "--gram", "1 0; 0 -1"],
    ["dp", "--k", "4"],
    ["table", "--rho", "9"],
    ["verify-paper", "--case", "nope"],
])
def test_bad_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_verify_single_cases(capsys):
    code, out, _ = run(capsys, "verify-paper", "--case", "rhoX5ii")
    assert code == 0 and one(out)["status"] == "deviation"
    code, out, _ = run(capsys, "verify-paper", "--case", "gale-F4")
    assert code == 0 and one(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify-paper", "--case", "rhoX5i")
    assert code == 1 and one(out)["status"] == "fail"


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify-paper")[1]
    second = run(capsys, "verify-paper")[1]
    assert first == second
    assert len(first.strip().splitlines()) > 20
