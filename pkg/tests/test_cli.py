import json
import pathlib

import ramarrow.containment as containment
from ramarrow.cli import main
from ramarrow.graphs import graph6_decode
from ramarrow.verify import run_verification

DATA = pathlib.Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- exit codes ---------------------------------------------------------------


def test_exit_code_arrows(capsys):
    code, out, _ = run_cli(capsys, "arrows", "--host", "K5\\P5", "--red", "M2", "--blue", "M2")
    assert code == 0
    assert "arrows" in out


def test_exit_code_counterexample(capsys):
    code, out, _ = run_cli(capsys, "arrows", "--host", "K4", "--red", "M2", "--blue", "M2")
    assert code == 1
    assert "counterexample" in out


def test_exit_code_indeterminate(capsys):
    code, _, _ = run_cli(
        capsys, "arrows", "--host", "K9\\P4", "--red", "F2", "--blue", "K3", "--budget", "5"
    )
    assert code == 2


def test_exit_code_usage(capsys):
    code, _, err = run_cli(capsys, "arrows", "--host", "K0", "--red", "M2", "--blue", "M2")
    assert code == 3 and "usage error" in err
    code, _, err = run_cli(capsys, "arrows", "--host", "Q4", "--red", "M2", "--blue", "M2")
    assert code == 3
    code, _, err = run_cli(
        capsys, "arrows", "--host", "K3", "--red", "M2", "--blue", "M2", "--jobs", "0"
    )
    assert code == 3
    code, _, err = run_cli(capsys, "verify-paper", "--only", "no-such-check")
    assert code == 3 and "no-such-check" in err
    code, _, err = run_cli(capsys, "nonsense")
    assert code == 3


# --- reports --------------------------------------------------------------------


def test_arrows_golden_report(capsys):
    code, out, _ = run_cli(
        capsys, "arrows", "--host", "K4", "--red", "M2", "--blue", "M2",
        "--deterministic", "--json",
    )
    assert code == 1
    report = json.loads(out)
    for stats in (report["stats"], report["outputs"]["stats"]):
        stats["runtime_ms"] = 0.0
        stats["nodes"] = 0
    golden = json.loads((DATA / "arrows_k4_matchings.json").read_text())
    assert report == golden
    # the outputs block is the library wire schema
    assert set(report["outputs"]) == {"host", "red", "blue", "verdict", "stats", "counterexample"}
    assert set(report["outputs"]["stats"]) == {"nodes", "runtime_ms", "propagation_mode"}


def test_arrows_witness_and_dimacs_files(tmp_path, capsys):
    witness = tmp_path / "witness.json"
    cnf = tmp_path / "out.cnf"
    code, _, _ = run_cli(
        capsys, "arrows", "--host", "K4", "--red", "M2", "--blue", "M2",
        "--deterministic", "--emit-witness", str(witness), "--dimacs", str(cnf),
    )
    assert code == 1
    payload = json.loads(witness.read_text())
    assert payload["coloring"][0] == [0, 1, "R"]
    red = graph6_decode(payload["red_graph6"])
    assert red.edge_count == 3
    text = cnf.read_text()
    assert "p cnf 6 6" in text
    assert "c edge 0 1 var 1" in text


def test_numbers_report_consistency(capsys):
    code, out, _ = run_cli(
        capsys, "numbers", "--red", "M2", "--blue", "M2", "--family", "path", "--json"
    )
    assert code == 0
    report = json.loads(out)
    ramsey = report["outputs"]["ramsey"]
    critical = report["outputs"]["critical"]
    assert ramsey["value"] == 5 and ramsey["catalog"] == 5
    assert ramsey["provenance"] == "search+catalog"
    assert critical["value"] == 5 and critical["closed_form"] == 5
    assert critical["index_unit"] == "vertices"
    assert report["outputs"]["consistent"] is True


def test_numbers_star_examples(capsys):
    code, out, _ = run_cli(capsys, "numbers", "--red", "S2", "--blue", "K3", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["outputs"]["ramsey"]["value"] == 5
    assert report["outputs"]["critical"]["value"] == 2

    code, out, _ = run_cli(capsys, "numbers", "--red", "S2", "--blue", "S2", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["outputs"]["ramsey"]["value"] == 3
    assert report["outputs"]["critical"]["value"] == 0


def test_verify_single_check(capsys):
    code, out, _ = run_cli(
        capsys, "verify-paper", "--only", "star-clique-critical", "--json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["passed"] is True
    assert [c["name"] for c in report["checks"]] == ["star-clique-critical"]
    assert report["checks"][0]["status"] == "pass"


def test_verify_full_level_stretch_skips_on_budget(capsys):
    # the deep fan search may report itself skipped when the budget runs out
    code, out, _ = run_cli(
        capsys, "verify-paper", "--level", "full", "--only", "fan3-triangle-arrowing",
        "--budget", "5", "--json",
    )
    assert code == 0
    report = json.loads(out)
    check = report["checks"][0]
    assert check["status"] == "skip"
    assert "witness half verified" in check["detail"]
    assert report["passed"] is True


def test_verify_writes_summary(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run_cli(
        capsys, "verify-paper", "--only", "witness-sweep", "--out", str(out_path)
    )
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["checks"][0]["name"] == "witness-sweep"
    assert "runtime_ms" in report["checks"][0]


# --- fault injection --------------------------------------------------------------


def test_broken_matching_detector_fails_named_check(capsys, monkeypatch):
    # a detector that never finds matchings must surface as a failing check
    monkeypatch.setattr(containment, "_has_matching", lambda g, size: False)
    report = run_verification(only={"containment-detectors"})
    assert report["passed"] is False
    check = report["checks"][0]
    assert check["name"] == "containment-detectors"
    assert check["status"] == "fail"

    code, out, _ = run_cli(
        capsys, "verify-paper", "--only", "containment-detectors", "--json"
    )
    assert code == 1
    named = json.loads(out)["checks"][0]
    assert named["name"] == "containment-detectors" and named["status"] == "fail"
