import io
import json

import pydot
import pytest

from modaltheory.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def q2(tmp_path):
    path = tmp_path / "q2.json"
    assert run("witness", "qn", "2", "--out", str(path))[0] == 0
    return str(path)


def test_parse_prints_normal_form():
    assert run("parse", "(p) -> (q -> r)") == (0, "p -> q -> r\n", "")


def test_parse_error_exit_code():
    code, _, err = run("parse", "p -> -> q")
    assert code == 2 and "token 2" in err


def test_unknown_flag_is_a_usage_error(q2):
    assert run("frame", "check", q2, "--formula", "p", "--bogus")[0] == 2
    assert run("frame", "check", q2, "--form", "p")[0] == 2


def test_axioms_on_q2(q2):
    code, out, _ = run("frame", "axioms", q2)
    assert code == 0
    rows = {line.split()[0]: line.split()[-1] if "INVALID" not in line else "INVALID" for line in out.splitlines()[1:]}
    assert rows["T"] == "valid" and rows["4"] == "valid" and rows[".2"] == "INVALID"


def test_check_prints_countervaluation(q2):
    code, out, _ = run("frame", "check", q2, "--formula", "<>[]p -> []<>p")
    assert code == 1 and "p = {2, 3}" in out
    code, out, _ = run("frame", "check", q2, "--formula", "<>[]p -> []<>p", "--json")
    doc = json.loads(out)
    assert code == 1 and doc["countervaluation"] == {"p": [2, 3]} and doc["world"] == 0


def test_check_valid_formula(q2):
    assert run("frame", "check", q2, "--formula", "p -> <>p")[0] == 0


def test_budget_refusal(tmp_path):
    path = tmp_path / "q3.json"
    run("witness", "qn", "3", "--out", str(path))
    code, _, err = run("frame", "check", str(path), "--formula", "p -> <>p", "--budget", "10")
    assert code == 2 and "budget" in err
    assert run("frame", "check", str(path), "--formula", "p -> <>p", "--method", "sat")[0] == 0


def test_missing_file():
    assert run("structure", "info", "/nonexistent.json")[0] == 2


def test_malformed_structure(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"universe": 2, "signature": {"functions": [{"name": "F", "arity": 1}]}, "functions": {"F": [0, 5]}}')
    assert run("structure", "info", str(path))[0] == 2


def test_structure_commands(tmp_path):
    path = tmp_path / "c.json"
    run("witness", "cycles", "1,2,3", "--fixedpoint", "--out", str(path))
    code, out, _ = run("structure", "info", str(path))
    assert code == 0 and "submodels: 8" in out
    dot = tmp_path / "sub.dot"
    code, out, _ = run("submodels", str(path), "--up-to-iso", "--dot", str(dot))
    assert code == 0 and "8 up to isomorphism" in out
    assert pydot.graph_from_dot_data(dot.read_text())
    code, out, _ = run("quotients", str(tmp_path / "c.json"))
    assert code == 0


def test_classframe_command(tmp_path):
    path = tmp_path / "c.json"
    run("witness", "cycles", "1,2,3", "--out", str(path))
    js = tmp_path / "cf.json"
    code, out, _ = run("classframe", "--kind", "sub", "--expand", str(path), "--json", str(js))
    assert code == 0 and out.startswith("orientation:") and "7 classes, 19 pairs" in out
    assert len(json.loads(js.read_text())["classes"]) == 7


def test_frame_ops(q2, tmp_path):
    code, out, _ = run("frame", "op", "refine", q2)
    assert code == 0 and json.loads(out)["worlds"] == 6
    code, out, _ = run("frame", "op", "gensub", q2, "--world", "2")
    assert json.loads(out)["worlds"] == 2
    code, out, _ = run("frame", "op", "subalg", q2, "--generators", "[[0, 1]]")
    sub = tmp_path / "sub.json"
    sub.write_text(out)
    code, out, _ = run("frame", "op", "quotient", str(sub), "--blocks", "[[0, 1], [2, 3, 4, 5]]")
    assert code == 0 and json.loads(out)["worlds"] == 2
    assert run("frame", "op", "quotient", q2, "--blocks", "[[0, 1], [2, 3, 4, 5]]")[0] == 2
    assert run("frame", "op", "sum", q2)[0] == 2
    code, out, _ = run("frame", "op", "sum", q2, q2)
    assert json.loads(out)["worlds"] == 12


def test_pmorphism_command(tmp_path):
    code, out, _ = run("witness", "shehtman", "1")
    doc = json.loads(out)
    assert code == 0 and doc["pmorphism"]
    (tmp_path / "s.json").write_text(json.dumps(doc["source"]))
    (tmp_path / "t.json").write_text(json.dumps(doc["target"]))
    (tmp_path / "m.json").write_text(json.dumps({"map": doc["map"]}))
    bad = list(doc["map"])
    bad[3] = 2
    (tmp_path / "b.json").write_text(json.dumps({"map": bad}))
    args = [str(tmp_path / "s.json"), str(tmp_path / "t.json"), "--map"]
    assert run("pmorphism", "check", *args, str(tmp_path / "m.json"))[0] == 0
    code, out, _ = run("pmorphism", "check", *args, str(tmp_path / "b.json"))
    assert code == 1 and json.loads(out)["violation"] == "back"


def test_medvedev_witness():
    code, out, _ = run("witness", "medvedev", "2", "--drop-empty", "--reversed")
    assert code == 0 and json.loads(out)["worlds"] == 3


def test_an_witness():
    code, out, _ = run("witness", "an", "2", "--bound", "12")
    assert code == 0 and "overall: PASS" in out
    assert run("witness", "an", "5", "--bound", "3")[0] == 2


def test_verify_with_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"criteria": [3, 10], "cycle_max": 6}')
    code, out, _ = run("verify", "paper", "--config", str(cfg), "--json")
    assert code == 0 and json.loads(out)["passed"]
    cfg.write_text('{"criteria": [3], "cycle_max": 13}')
    assert run("verify", "paper", "--config", str(cfg))[0] == 1
    cfg.write_text('{"what": 1}')
    assert run("verify", "paper", "--config", str(cfg))[0] == 2


def test_verify_paper_default():
    code, out, _ = run("verify", "paper")
    assert code == 0 and "overall: PASS" in out
