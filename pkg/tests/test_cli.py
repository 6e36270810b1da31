import json

import pytest

from waldschmidt import cli
from waldschmidt.fixtures import fixture


def write_points(tmp_path, name, points=None):
    if points is None:
        points = [p.to_json() for p in fixture(name).points]
    path = tmp_path / (name.replace("(", "_").replace(")", "_") + ".json")
    path.write_text(json.dumps({"points": points}))
    return str(path)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_classify_text_output(tmp_path, capsys):
    path = write_points(tmp_path, "L4Q3-A")
    code, out = run(capsys, ["classify", path])
    assert code == 0
    assert "exact: 16/7" in out


def test_classify_json_roundtrip(tmp_path, capsys):
    path = write_points(tmp_path, "CONIC6-TYPE1")
    code, out = run(capsys, ["--json", "classify", path])
    assert code == 0
    blob = json.loads(out)
    assert blob["value"] == {"exact": "7/3"}
    assert json.loads(json.dumps(blob)) == blob
    assert blob["certificates"]["lower"]["bound"] == "7/3"


def test_classify_duplicate_point_is_input_error(tmp_path, capsys):
    path = tmp_path / "dup.json"
    path.write_text(json.dumps({"points": [["1", "0", "0"], ["1", "0", "0"],
                                           ["0", "1", "0"]]}))
    code, out = run(capsys, ["classify", str(path)])
    assert code == cli.EXIT_INPUT_ERROR
    assert "distinct" in out


def test_classify_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out = run(capsys, ["classify", str(path)])
    assert code == cli.EXIT_INPUT_ERROR


def test_alpha_command(tmp_path, capsys):
    path = write_points(tmp_path, "L4Q3-D")
    code, out = run(capsys, ["alpha", path, "-m", "2"])
    assert code == 0
    assert "alpha(2X) = 5" in out
    code, out = run(capsys, ["--json", "alpha", path, "-m", "1"])
    assert json.loads(out)["alpha"] == 3


def test_alpha_single_point_m3(tmp_path, capsys):
    path = tmp_path / "one.json"
    path.write_text(json.dumps({"points": [["0", "0", "1"]]}))
    code, out = run(capsys, ["alpha", str(path), "-m", "3"])
    assert code == 0
    assert "alpha(3X) = 3" in out


def test_sweep_command(tmp_path, capsys):
    path = write_points(tmp_path, "L4Q3-A")
    code, out = run(capsys, ["--m-max", "3", "--json", "sweep", path])
    assert code == 0
    blob = json.loads(out)
    assert blob["sweep"] == [[1, "3", "3"], [2, "5", "5/2"], [3, "7", "7/3"]]
    assert blob["minimum"] == "7/3"


def test_lower_command_echoes_reference_multipliers(tmp_path, capsys):
    path = write_points(tmp_path, "L4Q3-B")
    aux = tmp_path / "aux.json"
    # sides of the residual triangle, carrier line, conic through the triangle
    # and the two free carrier points (indices: P1..P4 then Q1..Q3)
    aux.write_text(json.dumps([
        {"type": "line", "through": [5, 6]},
        {"type": "line", "through": [4, 6]},
        {"type": "line", "through": [4, 5]},
        {"type": "line", "through": [0, 1]},
        {"type": "conic", "through": [4, 5, 6, 2, 3]},
    ]))
    code, out = run(capsys, ["--json", "lower", path, str(aux)])
    assert code == 0
    blob = json.loads(out)
    assert blob["verified"] is True
    assert blob["certificate"]["bound"] == "7/3"
    duals = {d["label"]: d["mult"] for d in blob["certificate"]["duals"]}
    # the reference combination uses weights (1, 2, 1, 1, 2)/9 after grouping
    assert duals["degree"] == "1/9"
    assert duals["conic(4,5,6,2,3)"] == "2/9"
    assert duals["line(0,1)"] == "1/9"


def test_lower_rejects_unverifiable_cubic(tmp_path, capsys):
    path = write_points(tmp_path, "CONIC5")
    aux = tmp_path / "aux.json"
    aux.write_text(json.dumps([
        {"type": "explicit", "degree": 3,
         "coeffs": ["1", "0", "0", "0", "0", "0", "1", "0", "0", "1"]},
    ]))
    code, out = run(capsys, ["lower", path, str(aux)])
    assert code == cli.EXIT_INPUT_ERROR or "unverif" in out.lower()


def test_upper_command(tmp_path, capsys):
    path = write_points(tmp_path, "L4Q3-D")
    divisor = tmp_path / "div.json"
    divisor.write_text(json.dumps({"m": 2, "terms": [
        {"coeff": 1, "line": [5, 6]},
        {"coeff": 1, "line": [4, 6]},
        {"coeff": 1, "line": [4, 5]},
        {"coeff": 2, "line": [0, 1]},
    ]}))
    code, out = run(capsys, ["upper", path, str(divisor)])
    assert code == 0
    assert "5/2" in out


def test_upper_insufficient_multiplicity(tmp_path, capsys):
    path = write_points(tmp_path, "L4Q3-D")
    divisor = tmp_path / "div.json"
    divisor.write_text(json.dumps({"m": 2, "terms": [
        {"coeff": 2, "line": [0, 1]},
    ]}))
    code, out = run(capsys, ["upper", path, str(divisor)])
    assert code == cli.EXIT_CHECK_FAILED
    assert "multiplicity" in out


def test_fixture_command(tmp_path, capsys):
    code, out = run(capsys, ["--json", "fixture", "CONIC8-CONC4"])
    assert code == 0
    blob = json.loads(out)
    assert blob["expected"] == {"exact": "5/2"}
    assert len(blob["points"]) == 9
    code, out = run(capsys, ["fixture", "NOPE"])
    assert code == cli.EXIT_INPUT_ERROR


def test_check_fixture_ok(capsys):
    code, out = run(capsys, ["check", "--fixture", "L4Q3-D"])
    assert code == 0
    assert out.startswith("ok")


def test_check_requires_target(capsys):
    code, out = run(capsys, ["check"])
    assert code == cli.EXIT_INPUT_ERROR


def test_runconfig_validation():
    with pytest.raises(ValueError):
        cli.RunConfig(m_max=0)
    with pytest.raises(ValueError):
        cli.RunConfig(modular_primes=(7, 7))
