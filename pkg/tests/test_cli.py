import csv
import io
import json
import subprocess
import sys

import pytest

from biosp.cli import main

TRUNC = ["--mu1", "1/2", "--mu2", "1/2", "--mu3", "1/2", "--N", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_algebra(capsys):
    code, out, _ = run(capsys, "verify", "algebra")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    ids = [r["identity"] for r in data["suites"][0]["reports"]]
    assert len(ids) == 16
    assert set(data["suites"][0]["reports"][0]) >= {"identity", "pass", "residual", "rule_applications"}


def test_verify_realization_fixed(capsys):
    code, out, _ = run(capsys, "verify", "realization", *TRUNC)
    assert code == 0 and json.loads(out)["pass"]


def test_verify_realization_mu4(capsys):
    code, out, _ = run(capsys, "verify", "realization", "--mu1", "1", "--mu2", "2/3", "--mu3", "0", "--mu4=-5/7")
    assert code == 0


def test_verify_integral(capsys):
    code, out, _ = run(capsys, "verify", "integral", *TRUNC)
    assert code == 0 and json.loads(out)["pass"]


def test_verify_orthogonality_csv(capsys):
    code, out, _ = run(capsys, "verify", "orthogonality", "--mu1", "1/3", "--mu2", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["suite", "identity", "result", "residual", "rule_applications"]
    assert all(r[2] == "pass" for r in rows[1:])


def test_seeded_sweep_is_deterministic(capsys):
    argv = ["verify", "orthogonality", "--samples", "3", "--seed", "7", "--nmax", "6"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    _, other, _ = run(capsys, "verify", "orthogonality", "--samples", "3", "--seed", "8", "--nmax", "6")
    assert other != first


def test_tables_jacobi(capsys):
    code, out, _ = run(capsys, "tables", "jacobi", "--alpha", "1", "--beta", "1", "--nmax", "2")
    data = json.loads(out)
    assert code == 0
    assert data["polys"] == ["1", "x - 1/2", "x^2 - 1/3*x - 1/3"]
    assert data["b"][:2] == ["1/2", "-1/6"] and data["u"][1] == "1/4"


def test_tables_bannai_ito(capsys):
    code, out, _ = run(capsys, "tables", "bannai-ito", *TRUNC)
    data = json.loads(out)
    assert code == 0 and len(data["polys"]) == 3 and data["U"][0] == "0"
    assert data["Omega"][1] == "-5/2"


def test_tables_overlap_csv(capsys):
    code, out, _ = run(capsys, "tables", "overlap", *TRUNC, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["n", "k=0", "k=1", "k=2"] and len(rows) == 4


def test_report_erratum(capsys):
    code, out, _ = run(capsys, "report", "erratum")
    assert code == 0 and len(json.loads(out)["entries"]) == 6


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("BIOSP_OUTPUT_DIR", str(tmp_path))
    code, out, _ = run(capsys, "tables", "jacobi", "--alpha", "1", "--beta", "1", "--nmax", "1")
    assert code == 0 and out == ""
    assert json.loads((tmp_path / "jacobi.json").read_text())["polys"][1] == "x - 1/2"


def test_output_flag_wins(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("BIOSP_OUTPUT_DIR", str(tmp_path / "env"))
    target = tmp_path / "sub" / "t.csv"
    code, _, _ = run(capsys, "tables", "jacobi", "--alpha", "1", "--beta", "1", "--nmax", "1", "--format", "csv", "-o", str(target))
    assert code == 0 and target.read_text().startswith("n,x^0,x^1")
    assert not (tmp_path / "env").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["tables", "jacobi", "--alpha", "0.5", "--beta", "1", "--nmax", "2"],
        ["tables", "jacobi", "--alpha", "1", "--beta", "1", "--nmax", "-1"],
        ["verify", "integral", "--mu1", "1/2", "--mu2", "1/2", "--mu3", "1/2"],
        ["verify", "realization", "--mu1", "1/2"],
        ["verify", "realization", *TRUNC, "--mu4", "1"],
        ["verify", "realization", *TRUNC, "--window", "3"],
        ["verify"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_domain_error_exit_2(capsys):
    code, _, err = run(capsys, "verify", "orthogonality", "--mu1=-1/2", "--mu2", "1")
    assert code == 2
    assert "mu1" in err and "-1/2" in err


def test_zero_denominator_exit_2(capsys):
    code, _, err = run(capsys, "tables", "jacobi", "--alpha=-3", "--beta=-1", "--nmax", "3")
    assert code == 2 and "alpha" in err


def test_failure_exit_1(monkeypatch, capsys):
    from biosp import ncalgebra
    from biosp.reports import Report, Suite

    monkeypatch.setattr(ncalgebra, "builtin_suite", lambda: Suite("algebra", (Report("broken", False, "1"),)))
    code, out, _ = run(capsys, "verify", "algebra")
    assert code == 1 and not json.loads(out)["pass"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "biosp", "tables", "jacobi", "--alpha", "1", "--beta", "1", "--nmax", "2", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert "-1/3,-1/3,1" in proc.stdout
