import json
import shutil
import subprocess
from pathlib import Path

import pytest

from whopf.cli import main

INPUTS = Path(__file__).resolve().parent.parent / "demos" / "inputs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("command,doc", [("verify", "z2_gf3.json"), ("groupoid", "z2_gf3.json"),
                                         ("comodule", "indiscrete_self.json"), ("cleft", "indiscrete_self.json"),
                                         ("crossed", "twisted_z2.json"), ("roundtrip", "twisted_z2.json"),
                                         ("equiv", "twisted_z2.json"), ("h2", "z2_gf3_trivial.json")])
def test_commands_pass(capsys, command, doc):
    code, out, _ = run(capsys, command, "--input", INPUTS / doc)
    assert code == 0, out
    assert "[FAIL]" not in out


def test_roundtrip_lines(capsys):
    _, out, _ = run(capsys, "roundtrip", "--input", INPUTS / "twisted_z2.json")
    assert "crossed→cleft→crossed: exact equality" in out
    _, out, _ = run(capsys, "roundtrip", "--input", INPUTS / "indiscrete_self.json")
    assert "cleft→crossed→cleft: isomorphism verified" in out


def test_equiv_and_h2_lines(capsys):
    _, out, _ = run(capsys, "equiv", "--input", INPUTS / "twisted_z2.json")
    assert "equivalent: no" in out and "candidates: 9 maps, 3 normalized" in out
    _, out, _ = run(capsys, "h2", "--input", INPUTS / "z2_gf3_trivial.json")
    assert "classes: 2" in out


def test_failing_task_exits_one(capsys):
    code, out, _ = run(capsys, "crossed", "--input", INPUTS / "m2_conjugation.json")
    assert code == 1
    assert "[FAIL] (g1)" in out
    code, _, _ = run(capsys, "crossed", "--input", INPUTS / "m2_conjugation.json", "--task", "crossed-conj")
    assert code == 0


def test_search_bound_exits_three(capsys):
    code, _, err = run(capsys, "equiv", "--input", INPUTS / "twisted_z2.json", "--max-enum", 4)
    assert code == 3 and "exceed" in err


def test_input_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    doc = json.loads((INPUTS / "twisted_z2.json").read_text())
    doc["structures"]["twisted"]["cocycle"][0][0] = "x"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "crossed", "--input", bad)
    assert code == 2 and "structures.twisted.cocycle[0]" in err
    bad.write_text("{not json")
    assert run(capsys, "crossed", "--input", bad)[0] == 2
    assert run(capsys, "h2", "--input", INPUTS / "z2_gf3.json")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_unknown_field(capsys, tmp_path):
    doc = json.loads((INPUTS / "z2_gf3.json").read_text())
    doc["field"] = "GF(4)"
    p = tmp_path / "f.json"
    p.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", "--input", p)
    assert code == 2 and "field" in err


def test_json_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "h2", "--input", INPUTS / "z2_gf3_trivial.json", "--json-out", path)
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["status"] == "pass" and data["field"] == "GF(3)"
    assert "seconds" not in a.read_text()


def test_list_identities(capsys):
    code, out, _ = run(capsys, "--list-identities")
    assert code == 0
    for label in ("[crossed]", "(g1)", "relacionsigmas", "new-weak-cleft"):
        assert label in out


def test_console_script():
    exe = shutil.which("whopf")
    if exe is None:
        pytest.skip("package not installed")
    proc = subprocess.run([exe, "verify", "--input", str(INPUTS / "z2_gf3.json")], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
