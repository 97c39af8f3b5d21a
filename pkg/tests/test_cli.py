"""Command-line behavior: subcommands, exit codes, report output."""

import importlib.resources
import json
import subprocess
import sys

import pytest

import pgw
from pgw import cli
from pgw.report import TOP_KEYS


def data_path(name):
    return str(importlib.resources.files("pgw").joinpath(f"data/{name}.pg"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out + captured.err


def test_check_demo_exit_zero(capsys):
    code, out = run(capsys, "check")
    assert code == 0
    assert "theorem_applicable: true" in out


def test_check_json_top_level_key_order(capsys):
    code, out = run(capsys, "check", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert list(rep) == list(TOP_KEYS)
    assert rep["group"]["name"] == "g2187"
    assert rep["hypotheses"]["theorem_applicable"] is True
    assert rep["witness"] is None
    assert rep["oracle"] is None


def test_check_failing_group_exit_one(capsys):
    code, out = run(capsys, "check", data_path("h27"), "--format", "json")
    assert code == 1
    rep = json.loads(out)
    assert rep["hypotheses"]["all_maximals_nonabelian"] is False
    assert rep["hypotheses"]["theorem_applicable"] is False


def test_check_even_p_exit_one(capsys):
    code, out = run(capsys, "check", data_path("q8"), "--format", "json")
    assert code == 1
    assert json.loads(out)["hypotheses"]["p_odd"] is False


def test_construct_applicable_group(capsys):
    code, out = run(capsys, "construct", data_path("m243"), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["witness"]["u"] is not None
    assert rep["verification"]["certified"] is True
    assert rep["verification"]["order"] == 3
    assert rep["verification"]["is_inner"] is False
    assert rep["verification"]["fixes_frattini_elementwise"] is True


def test_construct_failing_group_exit_one(capsys):
    code, out = run(capsys, "construct", data_path("h27"), "--format", "json")
    assert code == 1
    assert json.loads(out)["witness"] is None


def test_construct_demo_matches_known_map(capsys):
    code, out = run(capsys, "construct", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["witness"]["u"] == "g6^1"
    assert rep["witness"]["g"] == "g2^1"
    assert rep["witness"]["images"][1] == "g2^1 g6^1"


def test_count_small_group(capsys):
    code, out = run(capsys, "count", data_path("x27"), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["oracle"]["total"] == 54
    assert rep["oracle"]["inner"] == 9
    assert rep["oracle"]["cross_validated"] is True


def test_count_even_p_still_counts(capsys):
    code, out = run(capsys, "count", data_path("q8"), "--format", "json")
    assert code == 0
    assert json.loads(out)["oracle"]["total"] == 24


def test_info_text(capsys):
    code, out = run(capsys, "info", data_path("w81"))
    assert code == 0
    assert "order 81 = 3^4" in out
    assert "class 3" in out


def test_info_accepts_user_file(capsys, tmp_path):
    src = importlib.resources.files("pgw").joinpath("data/h27.pg").read_text()
    f = tmp_path / "mygroup.pg"
    f.write_text(src.replace("name h27", "name mygroup"))
    code, out = run(capsys, "info", str(f), "--format", "json")
    assert code == 0
    assert json.loads(out)["group"]["name"] == "mygroup"


def test_syntax_error_exit_two(capsys, tmp_path):
    f = tmp_path / "bad.pg"
    f.write_text("name bad\np 4\nn 1\n")
    code, out = run(capsys, "check", str(f))
    assert code == 2
    assert "bad.pg:2:" in out and "not prime" in out


def test_inconsistent_file_exit_two(capsys, tmp_path):
    f = tmp_path / "incons.pg"
    f.write_text(
        "name incons\np 3\nn 3\n"
        "pow 1 = g2^1\npow 2 = g3^1\n"
        "comm 2 1 = g3^1\n"
        "def 2 = pow 1\ndef 3 = pow 2\n"
    )
    code, out = run(capsys, "check", str(f))
    assert code == 2


def test_missing_file_exit_two(capsys, tmp_path):
    code, out = run(capsys, "check", str(tmp_path / "nope.pg"))
    assert code == 2


def test_oracle_budget_exit_two(capsys):
    code, out = run(capsys, "count", data_path("m243"), "--budget", "0")
    assert code == 2
    assert "budget" in out


def test_report_file_written(capsys, tmp_path):
    target = tmp_path / "rep.json"
    code, out = run(capsys, "check", data_path("w81"), "--report", str(target))
    assert code == 1  # w81 fails the centralizer condition
    rep = json.loads(target.read_text())
    assert rep["group"]["name"] == "w81"
    assert rep["hypotheses"]["zm_condition"] is False
    assert "zm_counterexample" in rep["hypotheses"]


def test_report_bytes_stable_across_runs(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "count", data_path("h27"), "--report", str(a))[0] == 0
    assert run(capsys, "count", data_path("h27"), "--report", str(b))[0] == 0
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    da.pop("timing"), db.pop("timing")
    assert json.dumps(da) == json.dumps(db)


def test_demo_runs_all_expectations(capsys):
    code, out = run(capsys, "demo")
    assert code == 0
    ok_lines = [l for l in out.splitlines() if l.startswith("ok: ")]
    assert len(ok_lines) >= 20
    assert "demo: all expectations hold" in out


def test_demo_rejects_file_argument():
    with pytest.raises(SystemExit):
        cli.main(["demo", data_path("h27")])


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "pgw.cli", "info", "--format", "json"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["group"]["order"] == 2187


def test_installed_script_available():
    proc = subprocess.run(
        ["pgw", "info", data_path("c9")], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert "order 9" in proc.stdout
