import json
import subprocess
import sys

import jsonschema
import pytest

from torsionkit.cli import UsageError, main, parse_config
from torsionkit.report import build_report, emit_report, load_schema


def run(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main([*argv, "--output", str(out)])
    report = json.loads(out.read_text()) if out.exists() else None
    return code, report


def validate(report):
    jsonschema.validate(report, load_schema())


@pytest.mark.parametrize("argv", [
    ["ideals", "--ring", "builtin:zmod4"],
    ["filters", "--ring", "builtin:zmod6"],
    ["derivations", "--ring", "builtin:t2f2"],
    ["check-differential", "--ring", "builtin:f2xf2"],
    ["goldie-lemmas", "--ring", "builtin:zmod8"],
    ["lambek-witness", "--ring", "builtin:t2f2"],
    ["symbolic", "--cases", "30"],
    ["zq-demo", "--group", "Z^2 + Z/4", "--matrix", "0,1,0;0,0,0;0,0,1"],
])
def test_commands_pass_and_validate(tmp_path, argv):
    code, report = run(tmp_path, *argv)
    assert code == 0
    validate(report)
    assert report["summary"]["failed"] == 0 and report["summary"]["exitCode"] == 0
    assert report["command"] == argv[0]


def test_ring_flag_before_subcommand(tmp_path):
    code, report = run(tmp_path, "--ring", "builtin:zmod4", "ideals")
    assert code == 0
    rows = report["results"][0]["data"]["ideals"]
    assert [r["elements"] for r in rows] == [[0], [0, 2], [0, 1, 2, 3]]


def test_config_echo(tmp_path):
    code, report = run(tmp_path, "ideals", "--ring", "builtin:zmod4", "--seed", "42")
    cfg = report["config"]
    assert cfg["seed"] == 42 and cfg["rings"] == ["builtin:zmod4"]
    assert cfg["caps"]["ring_order"] == 64


def test_violation_exits_one(tmp_path, capsys):
    code, report = run(tmp_path, "filters", "--ring", "builtin:zmod4", "--family", "5,f")
    assert code == 1
    validate(report)
    bad = [c for s in report["results"] for c in s["checks"] if not c["pass"]]
    assert bad[0]["name"] == "family-gabriel-axioms"
    assert bad[0]["witness"] == ["axiom2", "5", "1"]
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    [],
    ["ideals"],
    ["ideals", "--ring", "builtin:nosuch"],
    ["ideals", "--ring", "builtin:zmod4", "--seed", "-1"],
    ["ideals", "--ring", "builtin:zmod4", "--seed", str(2**64)],
    ["ideals", "--ring", "builtin:zmod4", "--caps", "colour=3"],
    ["ideals", "--ring", "builtin:zmod4", "--bogus"],
    ["ideals", "--ring", "builtin:zmod4", "--ring-order", "3"],
    ["sweep", "--corpus", "huge"],
    ["symbolic", "--expr", "1/(x-x)"],
    ["zq-demo", "--group", "Z/4 + Z/6"],
    ["zq-demo", "--group", "Z", "--matrix", "1,2"],
    ["filters", "--ring", "builtin:zmod4", "--family", "zz"],
])
def test_usage_and_input_errors_exit_two(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_env_caps(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TORSIONKIT_CAPS", "ring_order=3")
    assert main(["ideals", "--ring", "builtin:zmod4"]) == 2
    monkeypatch.setenv("TORSIONKIT_CAPS", "bogus=1")
    assert "bogus" in (main(["ideals", "--ring", "builtin:zmod4"]), capsys.readouterr().err)[1]
    monkeypatch.setenv("TORSIONKIT_CAPS", "ring_order=3")
    # flags take precedence over the environment
    assert main(["ideals", "--ring", "builtin:zmod4", "--ring-order", "8"]) == 0


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("ring=builtin:zmod6\nseed=9\ncaps=lattice_size=10\n")
    code, report = run(tmp_path, "filters", "--config", str(cfg))
    assert code == 0
    assert report["config"]["seed"] == 9 and report["config"]["caps"]["lattice_size"] == 10
    cfg.write_text("ring=builtin:zmod6\ncolour=blue\n")
    with pytest.raises(UsageError, match="colour"):
        parse_config(["filters", "--config", str(cfg)])


def test_module_file(tmp_path):
    mod = tmp_path / "c.mod"
    mod.write_text("module kind=cyclic ideal=5\n")
    code, report = run(tmp_path, "derivations", "--ring", "builtin:zmod4", "--module", str(mod))
    assert code == 0
    assert report["config"]["modules"] == [str(mod)]


def test_lambek_single_tuple(tmp_path):
    mod = tmp_path / "r.mod"
    mod.write_text("module kind=regular\n")
    code, report = run(tmp_path, "lambek-witness", "--ring", "builtin:zmod4", "--module", str(mod),
                       "--x", "0", "--r", "1", "--s", "1")
    assert code == 0
    assert report["results"][0]["data"]["t"] == 1
    # ann(1) = {0} is not dense, so there is no witness
    code, report = run(tmp_path, "lambek-witness", "--ring", "builtin:zmod4", "--module", str(mod),
                       "--x", "1", "--r", "1", "--s", "1")
    assert code == 1


def test_symbolic_expr(tmp_path):
    code, report = run(tmp_path, "symbolic", "--cases", "5", "--expr", "1/x")
    assert code == 0
    assert report["results"][0]["data"]["derivatives"] == [
        {"input": "1/x", "canonical": "(1)/(x)", "derivative": "(-1)/(x^2)"}]


def test_same_seed_same_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["symbolic", "--cases", "20", "--seed", "5", "-o", str(path), "-q"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().endswith(b"}\n")


def test_timing_only_on_request(tmp_path):
    _, report = run(tmp_path, "ideals", "--ring", "builtin:zmod2")
    assert "timing" not in report
    _, report = run(tmp_path, "ideals", "--ring", "builtin:zmod2", "--timing")
    assert "ideals" in report["timing"]
    validate(report)


def test_stdout_report(capsys):
    assert main(["ideals", "--ring", "builtin:zmod2", "-o", "-"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["command"] == "ideals"
    assert "checks" in captured.err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "torsionkit.cli", "ideals", "--ring", "builtin:zmod3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "ideals:" in proc.stdout


def test_empty_report_is_valid(tmp_path):
    report = build_report("sweep", parse_config(["sweep"]).echo(), [])
    assert report["summary"] == {"checks": 0, "passed": 0, "failed": 0, "exitCode": 0}
    validate(report)
    path = tmp_path / "empty.json"
    written = emit_report(report, str(path))
    assert written == len(path.read_bytes())
    assert json.loads(path.read_text()) == report


def test_unwritable_output_exits_two(tmp_path):
    assert main(["ideals", "--ring", "builtin:zmod2", "-o", str(tmp_path / "missing" / "r.json")]) == 2
