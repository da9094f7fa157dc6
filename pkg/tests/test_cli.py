import json

import pytest
from click.testing import CliRunner

from latheta.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_theta_human(runner):
    res = runner.invoke(main, ["theta", "--lattice", "a2", "--bound", "9"])
    assert res.exit_code == 0
    assert "1 + 6 q + 6 q^{3} + 6 q^{4} + 12 q^{7} + 6 q^{9}" in res.output


def test_gts_rendering(runner):
    res = runner.invoke(main, ["gts", "--lattice", "a2", "-r", "2", "-m", "2"])
    assert res.exit_code == 0
    assert "36 q^{3/4} + 156 q^{3}" in res.output
    assert "guaranteed" in res.output


def test_gts_json(runner):
    res = runner.invoke(main, ["--json", "gts", "--lattice", "a2"])
    body = json.loads(res.output)
    assert body["terms"][0]["count"] == 36


def test_norms(runner):
    res = runner.invoke(main, ["norms", "--lattice", "d4"])
    assert res.exit_code == 0
    assert "nu = (2, 3, 4, 4)" in res.output


def test_stable(runner):
    res = runner.invoke(main, ["stable", "--lattice", "a2_c1"])
    assert res.exit_code == 0 and "stable" in res.output
    res = runner.invoke(main, ["stable", "--lattice", "d4bar"])
    assert "unstable" in res.output


def test_ratio_csv_stdout(runner):
    res = runner.invoke(main, ["ratio", "--lattice", "zn:2", "--points", "8",
                               "--csv", "-"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "tau,delta"
    assert len(lines) >= 9
    tau, delta = lines[1].split(",")
    assert abs(float(delta) - 1.0) < 1e-9


def test_ratio_csv_file(runner, tmp_path):
    out = tmp_path / "scan.csv"
    res = runner.invoke(main, ["ratio", "--lattice", "zn:2", "--points", "8",
                               "--csv", str(out)])
    assert res.exit_code == 0
    assert out.read_text().startswith("tau,delta\n")


def test_ghw_and_constructa(runner):
    res = runner.invoke(main, ["ghw", "--code", "c2"])
    assert "d = {2, 3, 6}" in res.output
    res = runner.invoke(main, ["constructa", "--code", "c1"])
    assert "volume_sq 1" in res.output


def test_inline_lattice_file(runner, tmp_path):
    f = tmp_path / "lat.json"
    f.write_text(json.dumps({"dim": 2, "gram": [["1", "1/2"], ["1/2", "1"]]}))
    res = runner.invoke(main, ["theta", "--lattice-file", str(f),
                               "--bound", "1"])
    assert res.exit_code == 0 and "6 q" in res.output


def test_exit_code_input_error(runner):
    res = runner.invoke(main, ["norms", "--lattice", "bogus"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["norms"])
    assert res.exit_code == 2


def test_exit_code_capacity(runner, monkeypatch):
    monkeypatch.setenv("LATHETA_MAX_VECTORS", "3")
    res = runner.invoke(main, ["theta", "--lattice", "a2", "--bound", "9"])
    assert res.exit_code == 3


def test_symmetry_command(runner):
    res = runner.invoke(main, ["symmetry", "--lattice", "zn:2"])
    assert res.exit_code == 0 and "symmetric" in res.output
