"""Command-line interface behavior, exit codes, and error tags."""

import json
import subprocess
import sys

import pytest

from liemult.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_named_algebra(capsys):
    code, out, _ = run_cli(capsys, "info", "L_{6,26}")
    assert code == 0
    assert "dim M:      8" in out
    assert "s:          3" in out
    assert "capable:    true" in out


def test_info_S1_json(capsys):
    code, out, _ = run_cli(capsys, "info", "S1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 8 and doc["dim_M"] == 15 and doc["s"] == 7


def test_info_abelian(capsys):
    code, out, _ = run_cli(capsys, "info", "A(3)")
    assert code == 0
    assert "undefined for abelian algebras" in out
    assert "t:          0" in out


def test_info_eps_spellings(capsys):
    code, out, _ = run_cli(capsys, "info", "L6_22", "--eps", "1/2")
    assert code == 0 and "L_{6,22}(1/2)" in out


def test_info_unknown_name(capsys):
    code, _, err = run_cli(capsys, "info", "nonsense")
    assert code == 2
    assert err.splitlines()[0] == "error=UnknownName"


def test_info_param_out_of_domain(capsys):
    code, _, err = run_cli(capsys, "info", "L_{6,21}", "--eps", "0")
    assert code == 2
    assert err.splitlines()[0] == "error=ParamOutOfDomain"


def test_compute_presentation_file(tmp_path, capsys):
    doc = {"dim": 3, "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}]}
    path = tmp_path / "h1.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "compute", str(path))
    assert code == 0
    assert "dim M:      2" in out
    assert "t:          1" in out


def test_compute_rejects_bad_pair_order(tmp_path, capsys):
    doc = {"dim": 3, "brackets": [{"i": 2, "j": 1, "terms": [{"k": 3, "c": "1"}]}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "compute", str(path))
    assert code == 2
    assert err.splitlines()[0] == "error=PresentationError"
    assert "(2, 1)" in err


def test_compute_reports_jacobi_violation(tmp_path, capsys):
    doc = {
        "dim": 4,
        "brackets": [
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
            {"i": 1, "j": 3, "terms": [{"k": 4, "c": "1"}]},
            {"i": 2, "j": 4, "terms": [{"k": 3, "c": "1"}]},
        ],
    }
    path = tmp_path / "jacobi.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "compute", str(path))
    assert code == 2
    assert err.splitlines()[0] == "error=JacobiViolation"
    assert "(1, 2, 3)" in err


def test_info_accepts_file_path(tmp_path, capsys):
    doc = {"dim": 2, "brackets": []}
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "info", str(path))
    assert code == 0 and "dim:        2" in out


def test_export_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "l610.json"
    code, _, _ = run_cli(capsys, "export", "L_{6,10}", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["dim"] == 6 and doc["name"] == "L_{6,10}"
    code, out, _ = run_cli(capsys, "compute", str(out_path))
    assert code == 0 and "dim M:      6" in out


def test_list_catalog_csv(capsys):
    code, out, _ = run_cli(capsys, "list", "--source", "table6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7  # header + six entries
    assert lines[0].startswith("name,dim,dim_derived")


def test_list_catalog_json_all(capsys):
    code, out, _ = run_cli(capsys, "list", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) >= 60


def test_verify_tables_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "tables", "--format", "csv")
    assert code == 0
    data = out.strip().splitlines()[1:]
    assert len(data) == 65
    assert all(line.endswith("ok") for line in data)


def test_verify_theorems_single_s(capsys):
    code, out, _ = run_cli(capsys, "verify", "theorems", "--s", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["computed"] == ["L_{5,8}"]


def test_verify_capability(capsys):
    code, out, _ = run_cli(capsys, "verify", "capability", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert all(row["match"] for row in doc)


def test_verify_all_small_cap_writes_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, "verify", "all", "--dim-cap", "5",
                         "--format", "json", "--out", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["summary"]["passed"] is True
    assert doc["closure"]["dim_cap"] == 5
    assert len(doc["documented_discrepancies"]) == 3


def test_cli_output_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "info", "L_{6,13}", "--format", "json")
    _, out2, _ = run_cli(capsys, "info", "L_{6,13}", "--format", "json")
    assert out1 == out2


@pytest.mark.slow
def test_module_invocation_deterministic_across_processes(tmp_path):
    cmd = [sys.executable, "-m", "liemult", "verify", "tables", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True)
    second = subprocess.run(cmd, capture_output=True, text=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.strip()
