"""CLI driver: subcommand output schemas, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from djkm.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_emits_shifted_table(capsys):
    code, out = run_cli(
        capsys, "gen", "--family", "P-4", "--view", "shifted", "--max-n", "12"
    )
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "P-4"
    assert data["view"] == "shifted"
    assert [e["n"] for e in data["entries"]] == list(range(13))
    by_n = {e["n"]: e["poly"]["coeffs"] for e in data["entries"]}
    assert by_n[6] == [["0", "1"], ["4", "5"]]
    assert by_n[12] == [["5", "77"], ["0", "1"], ["-416", "385"], ["0", "1"], ["2048", "1155"]]


def test_gen_accepts_max_alias(capsys):
    code, out = run_cli(capsys, "gen", "--family", "P-2", "--max", "6")
    assert code == 0
    data = json.loads(out)
    assert data["view"] == "shifted"
    assert data["entries"][6]["poly"]["coeffs"] == [["1", "5"]]


def test_gen_q_view_families(capsys):
    code, out = run_cli(capsys, "gen", "--family", "qbar", "--max-n", "2")
    assert code == 0
    data = json.loads(out)
    assert data["view"] == "qbar"
    assert data["entries"][0]["n"] == -1
    assert data["entries"][1]["poly"]["coeffs"] == [["1", "5"]]


def test_gen_view_conflict_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "gen", "--family", "q", "--view", "shifted", "--max-n", "4")
    assert exc.value.code == 2


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "gen", "--family", "P-4", "--no-such-flag")
    assert exc.value.code == 2


def test_verify_ode_report_shape(capsys):
    code, out = run_cli(capsys, "verify-ode", "--family", "P-2", "--max-n", "24")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "verify-ode"
    assert data["status"] == "pass"
    assert len(data["items"]) == 25
    odd = [i for i in data["items"] if i["n"] % 2]
    assert odd and all(i["member_zero"] for i in odd)


def test_verify_ode_threads_give_same_items(capsys):
    _, out1 = run_cli(capsys, "verify-ode", "--family", "P-4", "--max-n", "16")
    _, out2 = run_cli(
        capsys, "verify-ode", "--family", "P-4", "--max-n", "16", "--threads", "4"
    )
    items1 = json.loads(out1)["items"]
    items2 = json.loads(out2)["items"]
    assert items1 == items2


def test_second_order_verify_includes_identity(capsys):
    code, out = run_cli(capsys, "verify-ode", "--family", "P-1", "--max-n", "20")
    assert code == 0
    data = json.loads(out)
    assert all(i["identity"] == "pass" for i in data["items"])
    assert [i["n"] for i in data["items"]] == list(range(2, 21))


def test_oracle_compare_both_routes(capsys):
    code, out = run_cli(capsys, "oracle-compare", "--family", "P-4", "--order", "20")
    assert code == 0
    data = json.loads(out)
    oracles = {i["oracle"] for i in data["items"]}
    assert oracles == {"elliptic-integral", "gegenbauer-sum"}
    assert all(i["matched"] for i in data["items"])


def test_cocycle_single_value(capsys):
    code, out = run_cli(capsys, "cocycle", "--i", "2", "--j", "1")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"w0", "w-1", "w-2", "w-3", "w-4"}
    assert data["w-3"]["coeffs"] == [["1", "2"]]
    assert data["w-1"]["coeffs"] == [["0", "1"], ["1", "2"]]


def test_cocycle_requires_indices_or_verify(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "cocycle", "--i", "2")
    assert exc.value.code == 2


def test_cocycle_verify_report(capsys):
    code, out = run_cli(capsys, "cocycle", "--verify", "--bound", "4")
    assert code == 0
    data = json.loads(out)
    checks = {i["check"]: i["status"] for i in data["items"]}
    assert checks == {
        "psi-table": "pass",
        "uu-central-terms": "pass",
        "antisymmetry": "pass",
    }


def test_orthogonality_report(capsys):
    code, out = run_cli(
        capsys, "orthogonality", "--family", "qbar", "--hankel", "6", "--gram", "4", "--json"
    )
    assert code == 0
    data = json.loads(out)
    checks = {i["check"]: i for i in data["items"]}
    assert checks["favard-lambdas"]["lambda1_sq"] == "2/7"
    assert len(checks["hankel-positivity"]["determinants"]) == 6
    assert data["status"] == "pass"


def test_quadrature_csv_format(capsys):
    code, out = run_cli(capsys, "quadrature", "--family", "qbar", "--nodes", "5", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "node,weight"
    assert len(lines) == 6
    total = sum(float(line.split(",")[1]) for line in lines[1:])
    assert abs(total - 1.0) < 1e-12


def test_nonclassical_report(capsys):
    code, out = run_cli(capsys, "nonclassical", "--family", "q", "--max-n", "6")
    assert code == 0
    data = json.loads(out)
    item = data["items"][0]
    assert item["solution_space_dim"] == 1
    assert item["verified"] is True


def test_deterministic_output(capsys):
    _, out1 = run_cli(capsys, "gen", "--family", "P-4", "--max-n", "10")
    _, out2 = run_cli(capsys, "gen", "--family", "P-4", "--max-n", "10")
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run_cli(
        capsys, "gen", "--family", "P-4", "--max-n", "4", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["family"] == "P-4"


def test_quick_profile_all(capsys):
    code, out = run_cli(capsys, "all", "--profile", "quick")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    assert all(i["status"] == "pass" for i in data["items"])


def test_desk_profile_all_within_budget(capsys):
    code, out = run_cli(capsys, "all", "--profile", "desk")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass"
    # stays inside the summed per-criterion runtime budgets (1+30+60+5 s)
    assert data["wall_time_ms"] < 96_000


def test_failing_report_exits_1(capsys):
    import time

    from djkm.cli import RunReport, _emit_report

    report = RunReport(command="demo", parameters={})
    report.add({"check": "x", "status": "fail"})
    code = _emit_report(report.finish(time.perf_counter()), None)
    capsys.readouterr()
    assert code == 1
    assert report.status == "fail"


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "djkm.cli", "gen", "--family", "P-4", "--max-n", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["family"] == "P-4"


def test_env_var_sets_default_threads(monkeypatch):
    monkeypatch.setenv("DJKM_THREADS", "3")
    from djkm.cli import build_parser

    args = build_parser().parse_args(["verify-ode", "--family", "P-4"])
    assert args.threads == 3
