import json
import shutil
import subprocess

import pytest

from rverify.cli import eval_functions, main


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "q783-special-values" in out and "entry35" in out


def test_list_by_tier_and_section(capsys):
    assert main(["list", "--tier", "experimental"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all("experimental" in line for line in lines)
    assert main(["list", "--section", "5"]) == 0
    by_number = capsys.readouterr().out
    assert main(["list", "--section", "elliptic"]) == 0
    assert capsys.readouterr().out == by_number
    assert "lemniscate-doubling" in by_number and "entry14" not in by_number


def test_list_bad_section(capsys):
    assert main(["list", "--section", "9"]) == 2
    assert "unknown section" in capsys.readouterr().err


def test_run_writes_reports(tmp_path, capsys):
    j, m = tmp_path / "r.json", tmp_path / "r.md"
    assert main(["run", "--filter", "q783-*", "--json", str(j), "--md", str(m)]) == 0
    data = json.loads(j.read_text())
    assert data["summary"]["pass"] == 8 and data["summary"]["fail"] == 0
    assert m.read_text().startswith("# Verification report")
    assert "pass 8  fail 0" in capsys.readouterr().out


def test_run_experimental_exit_zero():
    assert main(["run", "--filter", "f-ns-*", "--tier", "experimental"]) == 0


def test_run_comma_separated_tiers(capsys):
    assert main(["run", "--filter", "entry5-*", "--tier", "standard,loose"]) == 0
    out = capsys.readouterr().out
    assert "entry5-constant-c" in out and "entry5-elliptic-printed" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--filter", "nothing-here"],
        ["run", "--tol-scale", "0.5"],
        ["run", "--jobs", "0"],
        ["run", "--tier", "bogus"],
        ["eval", "no_such_function", "1"],
        ["eval", "li2", "2.5"],
        ["run", "--tol-scale", "abc"],
        [],
    ],
)
def test_configuration_errors_exit_two(argv):
    assert main(argv) == 2


def test_eval_ram_phi(capsys):
    assert main(["eval", "ram_phi", "3.14159"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.0732, abs=1e-4)


def test_eval_complex_argument(capsys):
    assert main(["eval", "gamma", "1j"]) == 0
    assert complex(capsys.readouterr().out.strip()).imag != 0


def test_eval_table_is_callable():
    table = eval_functions()
    assert {"ram_phi", "zeta", "lemniscate_F", "entry14_residual", "rogers_ramanujan_cf"} <= set(table)
    assert all(callable(f) for f in table.values())


def test_version(capsys):
    assert main(["--version"]) == 0
    assert "rverify" in capsys.readouterr().out


@pytest.mark.skipif(shutil.which("rverify") is None, reason="console script not installed")
def test_console_script_exit_codes():
    assert subprocess.run(["rverify", "run", "--filter", "q295-*"], capture_output=True).returncode == 0
    assert subprocess.run(["rverify", "run", "--filter", "zzz"], capture_output=True).returncode == 2
