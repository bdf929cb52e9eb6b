import json
import subprocess
import sys

import pytest

from trivector_invariants.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_p2(capsys):
    code, out, _ = run(capsys, "invariants", "e1^e2^f2 + e1^e3^f3")
    assert code == 0
    assert "I1 = 0\nI2 = 0\n" in out
    assert "agree" in out and "DISAGREE" not in out


def test_invariants_json_and_form(capsys):
    code, out, _ = run(capsys, "invariants", "--form", "D2", "--param", "lam=18", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"I1": "18", "I2": "2160", "c4": "-1", "c2": "1/4", "routes": {"I1": True, "I2": True}}


def test_invariants_doc(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text('{"123": "1", "456": "1"}')
    code, out, _ = run(capsys, "invariants", "--doc", str(path))
    assert code == 0 and "I2 = -72" in out


def test_char_poly(capsys):
    code, out, _ = run(capsys, "char-poly", "--form", "D2", "--param", "lam=18")
    assert code == 0
    assert out.splitlines() == ["x^6: 1", "x^5: 0", "x^4: -1", "x^3: 0", "x^2: 1/4", "x^1: 0", "x^0: 0"]


def test_normal_form(capsys):
    code, out, _ = run(capsys, "normal-form", "P6", "--param", "q=1", "--param", "p=1", "--invariants")
    assert code == 0
    assert "I1 = -4\nI2 = -264\n" in out and "match" in out
    code, out, _ = run(capsys, "normal-form", "P3", "--param", "q=2", "--emit")
    assert out.splitlines() == ["v1^v2^v3 + 2*v4^v5^v6", '{"123": "1", "456": "2"}']


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", "--seed", "1", "--points", "20")
    assert code == 0 and out.strip().endswith(": 18")


def test_sweeps(capsys):
    code, out, _ = run(capsys, "verify-invariance", "--seed", "2", "--trials", "5", "--equivariance")
    assert code == 0 and out.count("PASS") == 2
    code, out, _ = run(capsys, "verify-infinitesimal", "--seed", "2", "--points", "2", "--json")
    assert code == 0 and all(r["ok"] for r in json.loads(out))


def test_tables_and_audit(capsys):
    code, out, _ = run(capsys, "tables", "--samples", "5")
    assert code == 0 and out.startswith("PASS tables")
    code, out, _ = run(capsys, "audit-appendix", "--trials", "5")
    assert code == 0
    assert "y156 y156 y234 y234: printed -4, structural -3" in out


@pytest.mark.parametrize("argv", [
    ["invariants", "e1^e2^q3"],
    ["invariants"],
    ["invariants", "e1^e2^e3", "--form", "A1"],
    ["normal-form", "E2'"],
    ["normal-form", "C6", "--param", "lam=1", "--param", "eps=0"],
    ["normal-form", "D2", "--param", "lam"],
])
def test_parse_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_data_error_exit_4(capsys, tmp_path):
    code, _, _ = run(capsys, "invariants", "--doc", str(tmp_path / "missing.json"))
    assert code == 4


def test_verification_failure_exit_3(capsys, monkeypatch):
    import trivector_invariants.cli as cli
    monkeypatch.setattr(cli, "i1_appendix", lambda theta: 12345)
    code, out, _ = run(capsys, "invariants", "e1^e2^e3")
    assert code == 3 and "DISAGREE" in out


def test_deterministic(capsys):
    first = run(capsys, "verify-invariance", "--seed", "9", "--trials", "3", "--json")
    assert first == run(capsys, "verify-invariance", "--seed", "9", "--trials", "3", "--json")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trivector_invariants", "invariants", "e1^e2^e3 + f1^f2^f3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "I2 = -72" in proc.stdout
