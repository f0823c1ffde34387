import json
import math

import numpy as np
import pytest

from oproot.cli import parse_and_dispatch
from oproot.matrixcore import read_matrix_csv


def test_root_cesaro_closed(tmp_path):
    out = tmp_path / "a.csv"
    assert parse_and_dispatch(["root", "cesaro-closed", "--n", "32", "--sign", "+1", "-o", str(out)]) == 0
    a = read_matrix_csv(out)
    assert a.shape == (32, 32)
    np.testing.assert_allclose(np.diag(a), 1 / np.sqrt(np.arange(1, 33)), atol=1e-12)
    side = json.loads(out.with_suffix(".json").read_text())
    assert side["name"] == "cesaro-closed" and side["params"] == {"n": 32, "sign": 1}
    assert side["schema"] == 1 and "constraint_residuals" in side


def test_root_sidecar_records_constraint(tmp_path):
    out = tmp_path / "q.csv"
    assert parse_and_dispatch(["root", "shift2-swap-sqrt", "--n", "16", "-o", str(out)]) == 0
    side = json.loads(out.with_suffix(".json").read_text())
    assert side["constraint_residuals"]["constraint"] <= 1e-12


def test_verify_eigen(tmp_path, capsys):
    assert parse_and_dispatch(["verify", "cesaro-eigen", "--w", "0.5", "--n", "64"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["pass"] and rep["claim_id"] == "cesaro-eigen"


def test_verify_failure_status(tmp_path):
    out = tmp_path / "r.json"
    assert parse_and_dispatch(["verify", "cesaro-eigen", "--w", "0.3", "--n", "16", "--tol", "1e-12", "-o", str(out)]) == 1
    assert json.loads(out.read_text())["pass"] is False


def test_build_and_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert parse_and_dispatch(["build", "cayley", "--n", "16", "-o", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "i" in a.read_text().splitlines()[0]


def test_root_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert parse_and_dispatch(["root", "tcos", "--n", "8", "--quad", "512", "-o", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.with_suffix(".json").read_bytes() == b.with_suffix(".json").read_bytes()


def test_figure(tmp_path):
    out = tmp_path / "f.csv"
    assert parse_and_dispatch(["figure", "fig2", "--radial", "16", "--angular", "16", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 256
    re, im = map(float, lines[0].split(","))
    assert re == pytest.approx(1 + math.exp(-1)) and im == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["root", "tcos", "--sign", "1"],
        ["root", "cesaro-closed", "--n", "0"],
        ["verify", "cesaro-eigen"],
        ["verify", "cesaro-eigen", "--w", "0.5", "--sizes", "1,2"],
        ["build", "nothing"],
        ["suite", "--only", "A99"],
        ["root", "shift2-identity", "--n", "7"],
    ],
)
def test_usage_errors(argv):
    assert parse_and_dispatch(argv) == 2


def test_suite_subset(capsys):
    status = parse_and_dispatch(["suite", "--only", "A04,A05"])
    out = capsys.readouterr().out
    assert status == 0
    assert "A04 PASS" in out and "A05 PASS" in out and "2/2" in out
