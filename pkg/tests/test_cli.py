import json
from importlib.resources import files

import jsonschema
import pytest

from orelab.cli import main

DATA = files("orelab") / "data"
SCHEMA = json.loads((DATA / "report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json_matches_golden_and_schema(capsys):
    code, out, _ = run(capsys, "analyze", "z6", "--out", "json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report == json.loads((DATA / "golden" / "analyze_z6.json").read_text())


def test_analyze_is_byte_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "analyze", "t2f2", "--out", "json", "--side", "all", "-o", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    jsonschema.validate(json.loads(a.read_text()), SCHEMA)


def test_analyze_from_file_with_lattice(capsys, tmp_path):
    ring = tmp_path / "r.ring"
    ring.write_text("product(zmod(2), zmod(3))\n")
    code, out, _ = run(capsys, "analyze", str(ring), "--out", "json", "--lattice", "--no-verify")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert "verification" not in report
    nodes = report["den0_lattice"]["nodes"]
    assert len(nodes) == 2 and len(nodes[0]) == 1 and nodes[1] == report["ring"]["units"]


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "z4", "--side", "left")
    assert code == 0
    assert "localization-maximal = true" in out and "verification: PASS" in out


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("zmod(\n")
    assert run(capsys, "analyze", str(bad))[0] == 2
    assert run(capsys, "analyze", "no_such_ring")[0] == 2


def test_axiom_failure_names_axiom(capsys, tmp_path):
    bad = tmp_path / "t.ring"
    bad.write_text("table{elements=[0,1]; add=[[0,1],[1,0]]; mul=[[0,0],[0,0]]; one=1}\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "multiplicative identity" in err


def test_lattice_budget_refusal(capsys):
    assert run(capsys, "analyze", "m2f2xz3", "--lattice", "--no-verify", "--side", "two")[0] == 3


def test_verify_pass_and_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "z6")
    assert code == 0 and out.startswith("zmod(6): PASS")
    code, out, _ = run(capsys, "verify", "z6", "--inject-fault")
    assert code == 1 and "FAIL join_theorem" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "z4", "--out", "json")
    assert code == 0
    assert "seconds" not in json.loads(out)


@pytest.mark.parametrize("argv,expected", [
    (["normalize", "D*H"], "(H + 1)*D"),
    (["mul", "I", "D"], "1 - e(0,0)"),
    (["fredholm", "D"], "ker=1 coker=0 index=1"),
    (["fredholm", "e(0,0)"], "ker=infinite coker=infinite index=undefined"),
    (["member", "H", "--set", "S0"], "true"),
    (["member", "D", "--set", "Sr0"], "false"),
    (["act", "D", "x^3"], "3*x^2"),
])
def test_i1_commands(capsys, argv, expected):
    code, out, _ = run(capsys, "i1", *argv)
    assert code == 0
    if expected is not None:
        assert out.strip() == expected


def test_i1_star_round_trip(capsys):
    _, out, _ = run(capsys, "i1", "star", "x*D")
    _, back, _ = run(capsys, "i1", "star", out.strip())
    _, norm, _ = run(capsys, "i1", "normalize", "x*D")
    assert back == norm


def test_i1_factor_and_ore(capsys):
    code, out, _ = run(capsys, "i1", "factor", "H*(1 + e(0,2))")
    assert code == 0 and out.splitlines() == ["v = H", "w = 1 + e(0,2)"]
    code, out, _ = run(capsys, "i1", "ore", "D", "H")
    assert code == 0
    assert out.splitlines() == ["u = H + 1", "v = D", "u*D == v*H : true"]


def test_i1_error_codes(capsys):
    assert run(capsys, "i1", "normalize", "D*(H")[0] == 2
    assert run(capsys, "i1", "factor", "D")[0] == 4
    assert run(capsys, "i1", "ore", "D^3 + H^3", "D^-3*H^2 + 1", "--cap", "0")[0] == 3
    assert run(capsys, "i1", "ore", "0", "H")[0] == 4


def test_corpus_listing(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and "z6: zmod(6)" in out
