import json
import subprocess
import sys

import pytest

from monodromy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_orbit(capsys, tmp_path):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "orbit", "q:3", "--dot", str(dot))
    assert code == 0
    summary = json.loads(out)
    assert summary["size"] == 8 and summary["complete"]
    assert dot.read_text().startswith("digraph")


def test_orbit_incomplete(capsys):
    code, out, _ = run(capsys, "orbit", "q:5", "--max-vertices", "2000")
    assert code == 1 and json.loads(out) == {"size": 2000, "complete": False}


def test_orbit_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("MONODROMY_THREADS", "2")
    code, out, _ = run(capsys, "orbit", "q:4")
    assert code == 0 and json.loads(out)["size"] == 27


@pytest.mark.parametrize("argv", [["orbit", "badname"], ["orbit", "q:1"], ["certify", "nope:3"], ["index", "q:3", "-s", "t1"]])
def test_invalid_input(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_nonpositive_budget(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["orbit", "q:3", "-m", "0"])
    assert exc.value.code == 2


def test_certify(capsys, tmp_path):
    out_file = tmp_path / "c.json"
    code, out, _ = run(capsys, "certify", "E:1", "-K", "50", "-o", str(out_file))
    assert code == 0 and json.loads(out)["strategy"] == "S2"
    assert run(capsys, "verify", str(out_file))[0] == 0
    code, out, _ = run(capsys, "certify", "q:4")
    assert code == 1 and out.strip() == "NOT FOUND"
    code, out, _ = run(capsys, "certify", "q:7")
    assert code == 0 and json.loads(out)["K"] == 50


def test_certify_auroux(capsys):
    code, out, _ = run(capsys, "certify", "E:1", "--auroux")
    assert code == 0 and json.loads(out)["strategy"] == "AUROUX"


def test_verify_failures(capsys, tmp_path):
    code, out, _ = run(capsys, "certify", "q:5", "-K", "5")
    obj = json.loads(out)
    obj["separator"] = "s1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 3 and out.startswith("FAIL")
    junk = tmp_path / "junk.json"
    junk.write_text("[1, 2")
    assert run(capsys, "verify", str(junk))[0] == 2
    obj["separator"] = 7
    bad.write_text(json.dumps(obj))
    assert run(capsys, "verify", str(bad))[0] == 2


def test_index(capsys):
    code, out, _ = run(capsys, "index", "q:3", "--sub", "s1^3, s2 s1 s2^-1")
    assert code == 0 and json.loads(out)["generates_stabilizer"]
    code, out, _ = run(capsys, "index", "q:4", "--sub", "s1^3, s2 s1 s2^-1, s3 s2 s3^-1")
    assert code == 0 and json.loads(out)["coset_count"] == 27
    code, out, _ = run(capsys, "index", "q:3", "--sub", "s1^3", "--max-cosets", "1000")
    assert code == 1 and not json.loads(out)["generates_stabilizer"]


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify-relations", "--genus", "2..4")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 9 and all(line.endswith("PASS") for line in lines)
    code, out, _ = run(capsys, "verify-relations", "--genus", "1")
    assert code == 0 and "(TaTb)^6 = I g=1 PASS" in out
    assert run(capsys, "verify-relations", "--genus", "0")[0] == 2
    assert run(capsys, "verify-relations", "-g", "3..2")[0] == 2


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "q:2")
    assert code == 0 and out.count("->") == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monodromy", "orbit", "q:2"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"size": 3, "complete": True, "fixed": {"s1": 0}}
