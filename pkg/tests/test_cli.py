import io
import json
import subprocess
import sys

import pytest

from bipolarsoft import datasets, equals, load_dataset, union_extended
from bipolarsoft.cli import main

CHOICE = "e1,e3,e4,e5,e7,e8"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cand():
    return datasets.path("candidates.json")


@pytest.fixture
def weights():
    return datasets.path("candidate_weights.json")


def test_validate(cand):
    code, out, _ = run("validate", cand)
    assert code == 0
    assert out.startswith("valid: 8 objects, 9 of 9 parameters")


def test_decide(cand):
    code, out, _ = run("decide", cand, "--params", CHOICE)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "object,e1,e3,e4,e5,e7,e8,d"
    assert [int(line.rsplit(",", 1)[1]) for line in lines[1:9]] == [3, 1, -3, 0, 0, 2, 2, 4]
    assert "optimal: m8" in lines
    assert "eliminated: -" in lines


def test_decide_weighted(cand, weights):
    code, out, _ = run("decide", cand, "--params", CHOICE, "--weights", weights)
    assert code == 0
    assert "m1,0.9,0.0,-0.5,0.6,0.9,0.9,2.8" in out
    assert "ranking: m8 (3.6), m1 (2.8), m6 (2.6), m7 (1.8), m2 (1.3), m5 (1.3), m4 (1.2), m3 (-1.0)" in out
    assert "optimal: m8" in out


def test_decide_json(cand, weights):
    code, out, _ = run("decide", cand, "--params", CHOICE, "--weights", weights, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["weighted"] is True
    assert doc["optimal"] == "m8"
    assert [r["object"] for r in doc["ranking"]][:3] == ["m8", "m1", "m6"]
    assert ["m2", "m5"] in doc["ind_decisions"]
    assert doc["core"] == ["e1", "e3", "e4", "e5", "e8"]


def test_decide_figure(cand, tmp_path):
    fig = tmp_path / "rank.png"
    code, out, _ = run("decide", cand, "--params", CHOICE, "--figure", fig)
    assert code == 0
    assert "optimal: m8" in out
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_reduce(cand):
    code, out, _ = run("reduce", cand, "--params", CHOICE, "--json")
    assert code == 0
    assert json.loads(out)["core"] == CHOICE.split(",")


def test_op_union_ext(tmp_path):
    out_path = tmp_path / "u.json"
    code, _, _ = run("op", "union-ext", datasets.path("houses_x.json"), datasets.path("houses_y.json"), "-o", out_path)
    assert code == 0
    expected = union_extended(datasets.load("houses_x"), datasets.load("houses_y"))
    assert equals(load_dataset(out_path), expected)


def test_op_to_stdout_csv():
    code, out, _ = run("op", "complement", datasets.path("houses_x.json"), "-o", "-", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("object,")


def test_op_restricted_without_common_domain(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    a.write_text("# parameters: e1;e2\nobject,e1\nu1,1\n")
    b.write_text("# parameters: e1;e2\nobject,e2\nu1,1\n")
    code, _, err = run("op", "int-res", a, b, "-o", tmp_path / "c.json")
    assert code == 4
    assert err.startswith("error:")


def test_hesitation(tmp_path):
    code, out, _ = run("hesitation", datasets.path("houses_x.json"), "--json")
    assert code == 0
    assert json.loads(out) == {"e1": ["h1"], "e2": [], "e3": ["h5"], "e6": ["h1"]}


def test_table_and_pair():
    code, out, _ = run("table", datasets.path("houses_x.json"))
    assert code == 0
    assert out.splitlines()[4] == "h4,-1,-1,-1,-1"
    code, out, _ = run("table", datasets.path("houses_x.json"), "--pair", "--json")
    assert json.loads(out)["g"][3] == [1, 1, 1, 1]


def test_consistency_violation_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"universe": ["h1"], "parameters": ["e3"], "positive": {"e3": ["h1"]}, "negative": {"e3": ["h1"]}}))
    code, _, err = run("decide", bad)
    assert code == 3
    assert err.count("\n") == 1


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("object,e1\nu1,7\n")
    assert run("validate", bad)[0] == 2


def test_unknown_parameter_exit_code(cand):
    assert run("decide", cand, "--params", "e1,e42")[0] == 4


def test_weight_error_exit_code(cand, tmp_path):
    w = tmp_path / "w.json"
    w.write_text('{"e1": 2}')
    assert run("decide", cand, "--params", "e1", "--weights", w)[0] == 5
    w.write_text('{"e1": 0.5}')
    assert run("decide", cand, "--params", "e1,e3", "--weights", w)[0] == 5


def test_missing_file_exit_code(tmp_path):
    assert run("validate", tmp_path / "nope.json")[0] == 1


def test_decide_is_deterministic(cand):
    assert run("decide", cand, "--params", CHOICE)[1] == run("decide", cand, "--params", CHOICE)[1]


def test_entry_point(cand):
    proc = subprocess.run(
        [sys.executable, "-m", "bipolarsoft.cli", "decide", str(cand), "--params", CHOICE],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "optimal: m8" in proc.stdout
