import json
import subprocess
import sys

import pytest


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "ospd.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_enumerate_spin_d4():
    code, out, _ = run_cli("enumerate", "--family", "classical", "-m", "4",
                           "-n", "0", "--lambda", "0", "--ell", "1")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 8
    for line in lines:
        json.loads(line)


def test_enumerate_super_deterministic():
    args = ("enumerate", "--family", "super", "-m", "2", "-n", "1",
            "--lambda", "1,1", "--ell", "2", "--max-boxes", "6")
    code1, out1, _ = run_cli(*args)
    code2, out2, _ = run_cli(*args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.count("\n") > 0


def test_enumerate_super_missing_bound_is_usage_error():
    code, _, err = run_cli("enumerate", "--family", "super", "-m", "2",
                           "-n", "1", "--lambda", "1,1", "--ell", "2")
    assert code == 2
    assert "max-boxes" in err


def test_invalid_plan_is_usage_error():
    code, _, err = run_cli("enumerate", "--family", "classical", "-m", "3",
                           "-n", "0", "--lambda", "2,2", "--ell", "3")
    assert code == 2


def test_graph_dot_spin_crystal():
    code, out, _ = run_cli("graph", "--family", "classical", "-m", "4",
                           "-n", "0", "--lambda", "0", "--ell", "1",
                           "--format", "dot")
    assert code == 0
    assert out.count("doublecircle") == 1
    assert sum(1 for l in out.splitlines() if "->" in l) > 0


def test_graph_json_roundtrip():
    code, out, _ = run_cli("graph", "--family", "classical", "-m", "3",
                           "-n", "0", "--lambda", "1", "--ell", "1")
    assert code == 0
    blob = json.loads(out)
    assert len(blob["vertices"]) == 4  # the other spin module of rank 3
    assert {"src", "color", "dst"} == set(blob["edges"][0])


def test_graph_super_records_truncation():
    code, out, _ = run_cli("graph", "--family", "super", "-m", "2", "-n", "2",
                           "--lambda", "0", "--ell", "1", "--max-boxes", "4")
    assert code == 0
    blob = json.loads(out)
    assert blob["truncated"]
    assert {"src", "color"} == set(blob["truncated"][0])


def test_char_two_terms():
    code, out, _ = run_cli("char", "--family", "classical", "-m", "2",
                           "-n", "0", "--lambda", "0", "--ell", "1")
    assert code == 0
    terms = json.loads(out)
    assert len(terms) == 2 and all(t["z"] == 1 for t in terms)


def test_kcoef_alphabet_independent():
    out = {}
    for m in ("8", "9"):
        code, text, _ = run_cli("kcoef", "--family", "classical", "-m", m,
                                "-n", "0", "--lambda", "2", "--ell", "2",
                                "--max-boxes", "8")
        assert code == 0
        out[m] = text
    assert out["8"] == out["9"]


def test_dims():
    code, out, _ = run_cli("dims", "--family", "classical", "-m", "4", "-n", "0",
                           "--lambda", "0", "--ell", "1")
    assert code == 0 and out.strip() == "8"


@pytest.mark.slow
def test_verify_default_battery_and_seed_reproducibility(tmp_path):
    code1, out1, err1 = run_cli("verify", "--seed", "7")
    assert code1 == 0, err1
    report = json.loads(out1)
    assert report["ok"] and report["seed"] == 7
    code2, out2, _ = run_cli("verify", "--seed", "7")
    assert out2 == out1
    code3, out3, _ = run_cli("verify", "--seed", "7", "--jobs", "2")
    assert code3 == 0 and out3 == out1


@pytest.mark.slow
def test_verify_mutation_fails_with_named_check():
    code, out, err = run_cli("verify", "--mutate", "flip-adm-i")
    assert code == 1
    report = json.loads(out)
    failing = [c["name"] for c in report["checks"] if not c["ok"]]
    assert failing
