"""CLI behavior: output shapes, format selection, exit codes."""

import json
import subprocess
import sys

import pytest

from chaincacti.cli import main


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_poly_text_output(capsys):
    assert main(["poly", "6,6/"]) == 0
    out = capsys.readouterr().out
    assert "spec: 6,6  engine: transfer" in out
    assert "psi = 194" in out
    assert "alpha = 6" in out
    assert "mis_count = 1" in out


def test_poly_json_envelope(capsys):
    code, payload = run_json(capsys, ["poly", "6,6/", "--format", "json"])
    assert code == 0
    assert set(payload) == {"command", "input", "result", "engine", "elapsed_ms"}
    assert payload["command"] == "poly"
    assert payload["engine"] == "transfer"
    result = payload["result"]
    assert result["coefficients"] == ["1", "11", "43", "73", "52", "13", "1"]
    assert result["psi"] == "194"
    assert result["crosschecked"] is True
    assert result["deleted"] == []


def test_poly_engines_agree(capsys):
    polys = []
    for engine in ("transfer", "recursive", "brute"):
        code, payload = run_json(
            capsys, ["poly", "5,6/", "--engine", engine, "--format", "json"]
        )
        assert code == 0
        polys.append(payload["result"]["coefficients"])
    assert polys[0] == polys[1] == polys[2]


def test_poly_no_crosscheck_flag(capsys):
    code, payload = run_json(
        capsys, ["poly", "6,6/", "--no-crosscheck", "--format", "json"]
    )
    assert code == 0
    assert payload["result"]["crosschecked"] is False


def test_poly_deletion_on_last_cycle(capsys):
    code, payload = run_json(
        capsys, ["poly", "6,6/", "--delete", "n:2", "--format", "json"]
    )
    assert code == 0
    assert payload["result"]["psi"] == "145"
    assert payload["result"]["deleted"] == ["2:2"]
    assert "note" not in payload["result"]


def test_poly_deletion_fallback_to_recursive(capsys):
    code, payload = run_json(
        capsys, ["poly", "6,6/", "--delete", "1:3", "--format", "json"]
    )
    assert code == 0
    assert payload["engine"] == "recursive"
    assert "transfer scan" in payload["result"]["note"]


def test_poly_multi_deletion(capsys):
    code, payload = run_json(
        capsys,
        ["poly", "6,6,6/2", "--delete", "1:3,n:2", "--engine", "recursive", "--format", "json"],
    )
    assert code == 0
    assert payload["result"]["deleted"] == ["1:3", "3:2"]


def test_poly_parse_errors(capsys):
    assert main(["poly", "6,6,6"]) == 2
    assert "positions are required" in capsys.readouterr().err
    assert main(["poly", "2,6/"]) == 2
    assert main(["poly", "6,6/", "--delete", "5"]) == 2
    assert main(["poly", "6,6/", "--delete", "9:1"]) == 2


def test_poly_bruteforce_cap(capsys):
    assert main(["poly", "8^5/1,1,1", "--engine", "brute"]) == 3
    assert "error:" in capsys.readouterr().err


def test_closed_path_and_cycle(capsys):
    code, payload = run_json(capsys, ["closed", "path", "--n", "4", "--format", "json"])
    assert code == 0
    assert payload["result"]["coefficients"] == ["1", "4", "3"]
    code, payload = run_json(capsys, ["closed", "cycle", "--n", "6", "--format", "json"])
    assert code == 0
    assert payload["result"]["psi"] == "18"


def test_closed_ortho_and_meta(capsys):
    code, payload = run_json(
        capsys, ["closed", "ortho", "--h", "6", "--n", "3", "--format", "json"]
    )
    assert code == 0
    assert payload["result"]["psi"] == "2002"
    assert payload["result"]["alpha"] == 8
    assert payload["result"]["mis_count"] == "5"
    code, payload = run_json(
        capsys, ["closed", "meta", "--h", "6", "--n", "3", "--format", "json"]
    )
    assert code == 0
    assert payload["result"]["psi"] == "2130"
    assert payload["result"]["alpha"] == 9


def test_closed_domain_errors(capsys):
    assert main(["closed", "meta", "--h", "3", "--n", "3"]) == 2
    assert "meta-position requires h >= 4" in capsys.readouterr().err
    assert main(["closed", "ortho", "--n", "2"]) == 2
    assert main(["closed", "cycle", "--n", "2"]) == 2


def test_sweep_json(capsys):
    code, payload = run_json(capsys, ["sweep", "6,6,6"])
    assert code == 0
    result = payload["result"]
    assert result["count"] == 3
    assert result["min"]["positions"] == [1]
    assert result["min"]["psi"] == "2002"
    assert result["max"]["positions"] == [2]
    assert result["verdicts"]["extremality"]["status"] == "pass"


def test_sweep_csv_stdout(capsys):
    assert main(["sweep", "6^4", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "positions,psi,alpha,mis_count"
    assert len(lines) == 10
    assert lines[1].startswith('"1,1",')


def test_sweep_out_file(tmp_path, capsys):
    target = tmp_path / "report.csv"
    assert main(["sweep", "6,6,6", "--format", "csv", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    content = target.read_text()
    assert content.startswith("positions,psi,alpha,mis_count\n")
    assert content.endswith("\n")


def test_sweep_out_unwritable(capsys):
    code = main(["sweep", "6,6,6", "--out", "/nonexistent-dir/report.json"])
    assert code == 4
    assert "error:" in capsys.readouterr().err


def test_sweep_degenerate_sizes(capsys):
    code, payload = run_json(capsys, ["sweep", "3^4"])
    assert code == 0
    assert payload["result"]["verdicts"]["extremality"]["status"] == "degenerate"


def test_sweep_parallel(capsys):
    code, payload = run_json(capsys, ["sweep", "6,6,6", "--jobs", "2"])
    assert code == 0
    assert payload["result"]["min"]["psi"] == "2002"


def test_verify_text(capsys):
    assert main(["verify", "engines", "--h", "3..4", "--n", "1..2"]) == 0
    out = capsys.readouterr().out
    for name in (
        "engine_agreement",
        "unit_and_vertex_counts",
        "reversal_invariance",
        "mirror_deletion_symmetry",
        "transfer_prefix_consistency",
        "vertex_deletion_identity",
    ):
        assert f"PASS {name}" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    code, payload = run_json(
        capsys, ["verify", "lemmas", "--h", "4..5", "--n", "2..3", "--format", "json"]
    )
    assert code == 0
    assert payload["result"]["all_passed"] is True
    names = [r["name"] for r in payload["result"]["results"]]
    assert names == ["ortho_deletion_min", "meta_deletion_max", "psi_deletion_ordering"]


def test_verify_recurrences_small(capsys):
    assert main(["verify", "recurrences", "--h", "4..6", "--n", "0..4"]) == 0


def test_verify_bad_range(capsys):
    assert main(["verify", "engines", "--h", "5..3"]) == 2
    assert main(["verify", "engines", "--h", "x..3"]) == 2


def test_format_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("CHAINCACTI_FORMAT", "json")
    assert main(["poly", "6/"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["result"]["psi"] == "18"
    # an explicit flag wins over the environment
    monkeypatch.setenv("CHAINCACTI_FORMAT", "text")
    code, payload = run_json(capsys, ["poly", "6/", "--format", "json"])
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chaincacti", "poly", "6/"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "psi = 18" in proc.stdout
