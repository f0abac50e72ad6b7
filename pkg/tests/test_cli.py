import json
import os
import subprocess
import sys

import pytest

from kcs.cli import main

from test_script import FULL

SCRIPT = "ring R = QQ[x]; koszul E = koszul(R; x); curved P = bgg(E, E); supp(P);\n" \
         "supp_point(P, (x));\n"


@pytest.fixture
def script(tmp_path):
    def write(text, name="s.kcs"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write


def test_run_prints_results(script, capsys):
    assert main(["run", script(SCRIPT)]) == 0
    out = capsys.readouterr().out
    assert "supp(P);  ->  V(x, chi1)" in out
    assert "supp_point(P, (x));  ->  false" in out


def test_strict_mode_exit_code(script):
    assert main(["run", script(SCRIPT), "--strict"]) == 1
    assert main(["run", script(SCRIPT.splitlines()[0] + "\n"), "--strict"]) == 0


def test_json_output_and_verify(script, tmp_path):
    out = tmp_path / "report.json"
    assert main(["run", script(SCRIPT), "--json", str(out), "--verify"]) == 0
    report = json.loads(out.read_text())
    assert report["version"] == "kcs-1"
    assert report["results"][0]["verified"] is True


def test_parse_error_exit_code(script, capsys):
    assert main(["run", script("supp(Q);")]) == 2
    err = json.loads(capsys.readouterr().out)
    assert err["error"]["message"] == "unknown name Q"
    assert err["error"]["line"] == 1


def test_curvature_mismatch_exit_code(script, capsys):
    bad = "ring R = QQ[x, chi:-2];\ncurved P = explicit(R; x^2*chi; [0, 1]; [[0, x], [chi, 0]]);"
    assert main(["run", script(bad)]) == 2
    err = json.loads(capsys.readouterr().out)["error"]
    assert err["type"] == "CurvatureError"
    assert err["line"] == 2


def test_empty_script(script, capsys):
    assert main(["run", script(""), "--json", "-"]) == 0
    assert json.loads(capsys.readouterr().out) == {"version": "kcs-1", "results": []}


def test_check_command(script, capsys):
    assert main(["check", script(SCRIPT)]) == 0
    assert "5 statements" in capsys.readouterr().out
    assert main(["check", script("ring R = QQ[x]")]) == 2


def test_missing_file(capsys):
    assert main(["run", "/nonexistent/file.kcs"]) == 2


def test_flags(script):
    assert main(["run", script(SCRIPT), "--order", "lex", "--max-nilpotence", "2",
                 "--gb-step-limit", "10000"]) == 0


def test_gb_step_limit_reports_error(script, capsys):
    assert main(["run", script(SCRIPT), "--gb-step-limit", "0"]) == 2
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "GroebnerLimitError"


def test_byte_identical_reports_across_processes(script, tmp_path):
    path = script(FULL)
    outputs = []
    for seed in ("1", "2"):
        out = tmp_path / f"r{seed}.json"
        env = dict(os.environ, PYTHONHASHSEED=seed)
        subprocess.run([sys.executable, "-m", "kcs.cli", "run", path, "--json", str(out)],
                       check=True, env=env, capture_output=True)
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
