from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import pytest

PKG = [sys.executable, "-m", "extremal2"]


def run_cli(*args: str):
    return subprocess.run(
        PKG + list(args), capture_output=True, text=True, timeout=300
    )


def fixture(name: str):
    return json.loads(
        resources.files("extremal2").joinpath("fixtures", name).read_text()
    )


def test_catalog_json_matches_fixture_rows():
    res = run_cli("catalog", "--format", "json")
    assert res.returncode == 0
    assert json.loads(res.stdout) == fixture("catalog.json")["rows"]


def test_version_goes_to_stderr_not_stdout():
    res = run_cli("catalog")
    assert "extremal2" in res.stderr
    assert "extremal2 " not in res.stdout


def test_byte_stable_output():
    first = run_cli("classify", "--format", "json")
    second = run_cli("classify", "--format", "json")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_bounds_summary_and_category_filter():
    res = run_cli("bounds", "--format", "json")
    assert json.loads(res.stdout) == fixture("bounds_summary.json")["rows"]
    res = run_cli("bounds", "semion", "--format", "json")
    assert json.loads(res.stdout) == [
        {"category": "semion", "c_min": "-23", "c_max": "57"}
    ]


def test_bounds_tables_check_mode():
    for table in ("nmax-positive", "nmax-negative"):
        res = run_cli("bounds", "--table", table, "--check")
        assert res.returncode == 0, res.stderr
        assert "check passed" in res.stderr


def test_classify_self_verifies_and_checks():
    res = run_cli("classify", "--check")
    assert res.returncode == 0
    rows = json.loads(res.stdout)
    assert len(rows) == 15


def test_classify_csv_and_md_render():
    res = run_cli("classify", "--format", "csv")
    header = res.stdout.splitlines()[0]
    assert header.startswith("category,c,h_ext,ell,chi_x")
    assert len(res.stdout.splitlines()) == 16
    res = run_cli("classify", "--format", "md")
    assert res.stdout.startswith("| category | c |")


def test_character_json_and_check():
    res = run_cli("character", "--category", "semion", "--c", "33", "--order", "3")
    data = json.loads(res.stdout)
    assert data["series0"][:3] == ["1", "3", "86004"]
    assert data["series1"][:2] == ["565760", "192053760"]
    assert data["exponent0"] == "-11/8"
    res = run_cli(
        "character", "--category", "semion", "--c", "33", "--order", "3", "--check"
    )
    assert res.returncode == 0


def test_character_check_without_fixture_row_is_mismatch():
    res = run_cli(
        "character", "--category", "semion-dagger", "--c", "27", "--check"
    )
    assert res.returncode == 1
    assert "no fixture row" in res.stderr


def test_usage_errors_exit_2():
    res = run_cli("character", "--category", "semion", "--c", "2")
    assert res.returncode == 2
    assert "class mod 8" in res.stderr
    res = run_cli("character", "--category", "nonsense", "--c", "1")
    assert res.returncode == 2
    res = run_cli("character", "--category", "semion", "--c", "1", "--order", "0")
    assert res.returncode == 2
    res = run_cli("bounds", "--table", "sideways")
    assert res.returncode == 2


def test_chi_subcommand_negative_charge():
    res = run_cli("chi", "--category", "yang-lee", "--c=-22/5")
    data = json.loads(res.stdout)
    assert data["chi"] == {"x": "0", "y": "310124", "z": "1", "w": "-244"}
    assert data["h_ext"] == "-1/5"


def test_rm_verify_check_and_md():
    res = run_cli("rm", "verify", "--check")
    assert res.returncode == 0
    res = run_cli("rm", "verify", "--format", "md")
    assert "top weight 7/4" in res.stdout


def test_out_writes_file(tmp_path):
    target = tmp_path / "catalog.json"
    res = run_cli("catalog", "--out", str(target))
    assert res.returncode == 0
    assert res.stdout == ""
    assert json.loads(target.read_text()) == fixture("catalog.json")["rows"]
