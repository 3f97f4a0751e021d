import io
import json
from pathlib import Path

import pytest

from binperiod.cli import execute

DATA = Path(__file__).parent / "data"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = execute([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_five_train_text():
    code, out, _ = run("analyze", DATA / "five_train.rsig")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "summary: classification: periodic, prime_period: 5"
    assert "window: [-2, 0)" in lines
    assert "  decomposition: period=5 limit=-2 members: [-2, 0) [1, 2)" in lines


def test_analyze_json_is_deterministic():
    a = run("analyze", DATA / "const.dsig", "--format", "json")[1]
    b = run("analyze", DATA / "const.dsig", "--format", "json")[1]
    assert a == b
    d = json.loads(a)
    assert d["classification"] == "constant" and d["prime_period"] == "1"


def test_point():
    code, out, _ = run("point", DATA / "five_train.rsig", "--mu", "1")
    assert code == 0 and "support: (-inf, 0) u {[1, 2) [3, 5)} + 5j, j >= 0" in out


def test_flow():
    code, out, _ = run("flow", DATA / "two_gate.flow", "--analyze")
    assert code == 0
    assert out.startswith("dsignal n=2\nprefix: 00\ncycle: 11 10\n")
    assert "summary: classification: eventually_periodic, prime_period: 2" in out
    assert "omega: 10 11" in out


def test_embed_and_sample():
    code, out, _ = run("embed", DATA / "const.dsig", "--t0", "0", "--h", "1")
    assert code == 0 and out == "rsignal n=2\ninitial: 01\n"
    code, out, _ = run("sample", DATA / "five_train.rsig", "--t0", "0", "--h", "1")
    assert code == 0 and out.startswith("dsignal n=1")


def test_sample_grid_mismatch_exit_code():
    code, out, err = run("sample", DATA / "five_train.rsig", "--t0", "1/2", "--h", "1")
    assert code == 1 and out == "" and err.startswith("GridMismatch")
    code, _, _ = run("sample", DATA / "five_train.rsig", "--t0", "1/2", "--h", "1", "--no-phase-check")
    assert code == 0


def test_perturb(tmp_path):
    script = tmp_path / "e.txt"
    script.write_text("set k=2 v=10\nset-progression k0=5 d=3 v=00\n")
    code, out, _ = run("perturb", DATA / "const.dsig", "--script", script)
    assert code == 0
    assert out.startswith("dsignal n=2\nprefix: 01 01 01 10\ncycle: 01 01 00\n")
    assert "prime_period: 3" in out


def test_check():
    code, out, _ = run("check", DATA / "five_train.rsig", "--T", "1,5")
    assert code == 0 and out.endswith("oracle_disagreements: 0\nok: yes\n")
    code, out, _ = run("check", DATA / "const.dsig", "--p-bound", "3", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


@pytest.mark.parametrize("argv", [
    ("check", DATA / "const.dsig"),
    ("check", DATA / "five_train.rsig"),
    ("analyze", DATA / "missing.dsig"),
    ("bogus",),
    ("point", DATA / "five_train.rsig"),
])
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err.startswith("usage error")


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.dsig"
    bad.write_text("dsignal n=2\nprefix:\ncycle: 0\n")
    code, _, err = run("analyze", bad)
    assert code == 2 and err.startswith("parse error")


def test_point_not_in_orbit_exit():
    code, _, err = run("point", DATA / "const.dsig", "--mu", "11")
    assert code == 1 and err.startswith("NotInOrbit")
