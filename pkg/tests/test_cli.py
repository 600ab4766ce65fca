import json

import pytest

from genocchi import audit
from genocchi.audit import AS_WRITTEN, IdentityId, Tag
from genocchi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def usage_error(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_numbers(capsys):
    code, out = run(capsys, "numbers", "--family", "genocchi", "--order", "2", "--max-n", "8")
    assert code == 0
    assert json.loads(out)["values"] == ["0", "0", "2", "-6", "6", "10", "-30", "-42", "238"]


def test_numbers_csv(capsys):
    code, out = run(capsys, "--format", "csv", "numbers", "--family", "bernoulli", "--order", "1", "--max-n", "2")
    assert (code, out) == (0, "n,value\n0,1\n1,-1/2\n2,1/6\n")


def test_poly(capsys):
    code, out = run(capsys, "poly", "--family", "euler", "--order", "1", "--n", "2")
    assert (code, json.loads(out)) == (0, ["0", "-1", "1"])
    code, out = run(capsys, "poly", "--family", "genocchi", "--order", "2", "--n", "3", "--at", "1/2")
    assert (code, json.loads(out)) == (0, "-3")  # 6x - 6 at x = 1/2


def test_poly_genocchi_order_zero_rejected(capsys):
    assert usage_error(capsys, "poly", "--family", "genocchi", "--order", "0", "--n", "2") == 2


def test_basis(capsys):
    code, out = run(capsys, "basis", "--to", "euler", "--order", "1", "--poly", '["0","0","1"]')
    assert code == 0
    assert json.loads(out) == {"family": "euler", "order": 1, "offset": 0, "coefficients": ["1/2", "1", "1"]}
    code, out = run(capsys, "basis", "--to", "genocchi", "--order", "2", "--poly", '["1"]', "--format", "csv")
    assert out == "index,coefficient\n2,1/2\n"


@pytest.mark.parametrize("argv", [
    ["basis", "--to", "euler", "--order", "1", "--poly", "[1/2]"],
    ["basis", "--to", "euler", "--order", "1", "--poly", "[]"],
    ["numbers", "--family", "catalan", "--order", "1", "--max-n", "3"],
    ["numbers", "--family", "euler", "--order", "-1", "--max-n", "3"],
    ["audit", "--k", "3..1"],
    ["audit", "--identities", "Eq99"],
    ["audit", "--jobs", "0"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert usage_error(capsys, *argv) == 2


def test_audit_eq13_reports_mismatch(capsys):
    code, out = run(capsys, "audit", "--identities", "Eq13", "--variants", "as-written", "--k", "1..1", "--n", "2..2")
    assert code == 0
    (v,) = json.loads(out)["verdicts"]
    assert v["outcome"] == "fail"
    assert v["mismatch"] == {"component": None, "degree": 1, "lhs": "2", "rhs": "-2"}


def test_audit_exit_1_when_oracle_identity_fails(capsys, monkeypatch):
    monkeypatch.setattr(audit, "ORACLE_VERIFIED", audit.ORACLE_VERIFIED | {IdentityId(Tag.EQ13, AS_WRITTEN)})
    code, out = run(capsys, "audit", "--identities", "Eq13", "--k", "1", "--n", "0..3")
    assert code == 1
    assert json.loads(out)["exit_code"] == 1


def test_audit_output_is_byte_stable(capsys, tmp_path):
    argv = ["audit", "--identities", "all", "--variants", "both", "--k", "1..2", "--n", "0..4"]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv, "--jobs", "3")
    assert first == second
    target = tmp_path / "report.json"
    code, out = run(capsys, *argv, "--output", str(target))
    assert (code, out) == (0, "")
    assert target.read_text(encoding="utf-8") == first


def test_audit_csv(capsys):
    code, out = run(capsys, "--format", "csv", "audit", "--identities", "Eq13,Eq14", "--k", "1", "--n", "2")
    lines = out.splitlines()
    assert lines[0] == "tag,variant,k,n,outcome,component,mismatch_degree,lhs,rhs"
    assert "Eq13,as-written,1,2,fail,,1,2,-2" in lines
    assert "Eq14,as-written,1,2,pass,,,," in lines


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run(
        [sys.executable, "-m", "genocchi", "numbers", "--family", "euler", "--order", "0", "--max-n", "2"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(r.stdout)["values"] == ["1", "0", "0"]
