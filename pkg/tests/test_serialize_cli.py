import json
import subprocess
import sys
from fractions import Fraction

import pytest

from wigneralg.operators import OperatorMatrix, fock_basis
from wigneralg.scalars import GaussianRational, NuPolynomial, RadicalSum
from wigneralg.serialize import (
    dumps,
    label_from_string,
    label_to_string,
    matrix_from_dict,
    matrix_to_csv,
    matrix_to_dict,
)
from wigneralg.single_mode import build_single_mode
from wigneralg.spin import build_js_spin_rep, build_so_nu3


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "wigneralg", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_label_roundtrip():
    for rep_basis in (build_js_spin_rep(3).basis, fock_basis(4)):
        for label in rep_basis:
            assert label_from_string(label_to_string(label)) == label
    assert label_to_string(label_from_string("two(2,5)")) == "two(2,5)"
    with pytest.raises(ValueError):
        label_from_string("nope(1)")


def test_matrix_roundtrip_exact():
    for matrix in (
        build_single_mode(5).a,
        build_js_spin_rep(3).j_plus,
        build_so_nu3(2).l_y,  # complex coefficients
        build_js_spin_rep(1).j0,  # rational halves
    ):
        data = json.loads(dumps(matrix_to_dict(matrix)))
        rebuilt = matrix_from_dict(data)
        assert rebuilt == matrix


def test_matrix_roundtrip_polynomial_coefficients():
    basis = fock_basis(2)
    entry = RadicalSum.from_polynomial(
        NuPolynomial.from_coeffs([Fraction(1, 3), GaussianRational(Fraction(0), Fraction(2))])
    ) * RadicalSum.sqrt_poly(NuPolynomial.from_coeffs([5, 2]))
    m = OperatorMatrix.from_entries(basis, {(0, 1): entry})
    assert matrix_from_dict(json.loads(dumps(matrix_to_dict(m)))) == m


def test_csv_numeric_export():
    s = build_single_mode(3)
    text = matrix_to_csv(s.a, 0.5)
    lines = text.strip().split("\n")
    assert lines[0] == "row,col,real,imag"
    assert len(lines) == 10
    cell = dict()
    for line in lines[1:]:
        r, c, re_, im = line.split(",")
        cell[(int(r), int(c))] = (float(re_), float(im))
    assert cell[(0, 1)][0] == pytest.approx(2.0 ** 0.5)
    assert cell[(1, 1)] == (0.0, 0.0)


# ---------------------------------------------------------------- CLI


def test_cli_numbers_table():
    proc = run_cli("numbers", "--max-n", "4")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    rows = {item["n"]: item for item in data["numbers"]}
    assert rows[2]["coefficients"] == [[2, 1]]
    assert rows[3]["coefficients"] == [[3, 1], [2, 1]]
    assert rows[1]["text"] == "1 + 2*nu"


def test_cli_spin_rep_roundtrip():
    proc = run_cli("spin-rep", "--two-j", "2")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    rebuilt = matrix_from_dict(data["operators"]["J+"])
    assert rebuilt == build_js_spin_rep(2).j_plus
    assert all(r["verdict"] != "fail" for r in data["reports"])


def test_cli_determinism():
    a = run_cli("spin-rep", "--two-j", "3")
    b = run_cli("spin-rep", "--two-j", "3")
    assert a.stdout == b.stdout
    e1 = run_cli("errata")
    e2 = run_cli("errata")
    assert e1.stdout == e2.stdout


def test_cli_csv_requires_single_nu():
    proc = run_cli("single-mode", "--dim", "3", "--format", "csv")
    assert proc.returncode == 2
    proc = run_cli("single-mode", "--dim", "3", "--format", "csv", "--nu", "0.5")
    assert proc.returncode == 0
    assert proc.stdout.startswith("operator,row,col,real,imag")


def test_cli_rejects_bad_nu():
    proc = run_cli("single-mode", "--dim", "3", "--format", "csv", "--nu", "-0.75")
    assert proc.returncode == 2
    assert "nu" in proc.stderr


def test_cli_usage_error():
    proc = run_cli("spin-rep")  # missing --two-j
    assert proc.returncode == 2
    assert run_cli("spin-rep", "--two-j", "0").returncode == 2
    assert run_cli("single-mode", "--dim", "1").returncode == 2
    assert run_cli("two-mode", "--dims", "1", "4").returncode == 2
    assert run_cli("numbers", "--max-n", "-3").returncode == 2


def test_cli_numbers_csv():
    proc = run_cli("numbers", "--max-n", "4", "--format", "csv", "--nu", "0.5")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "n,value"
    values = {int(l.split(",")[0]): float(l.split(",")[1]) for l in lines[1:]}
    assert values[3] == pytest.approx(4.0)  # [3] = 3 + 2*0.5
    assert values[4] == pytest.approx(4.0)


def test_cli_so3_csv_has_imaginary_entries():
    proc = run_cli("so3-rep", "--two-j", "1", "--format", "csv", "--nu", "0.25")
    assert proc.returncode == 0
    rows = [l.split(",") for l in proc.stdout.strip().split("\n")[1:]]
    ly = {(r[1], r[2]): (float(r[3]), float(r[4])) for r in rows if r[0] == "Ly"}
    # Ly entry (0,1) = -(i/2)(1+2nu) -> imag part -(1+0.5)/2
    assert ly[("0", "1")][0] == pytest.approx(0.0)
    assert ly[("0", "1")][1] == pytest.approx(-0.75)
    assert ly[("1", "0")][1] == pytest.approx(0.75)


def test_cli_hp_rep_odd_refusal():
    proc = run_cli("hp-rep", "--two-j", "1")
    assert proc.returncode == 1
    data = json.loads(proc.stdout)
    assert data["error"] == "odd-two-j-not-closed"
    assert data["leakage"] == "2*sqrt(nu)"


def test_cli_hp_rep_even():
    proc = run_cli("hp-rep", "--two-j", "2")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert set(data["operators"]) == {"J+", "J-", "J0", "R"}


def test_cli_errata_text():
    proc = run_cli("errata")
    assert proc.returncode == 0
    out = proc.stdout
    assert "ERRATUM 1: odd-2j condensed commutator coefficient" in out
    assert "2 nu (2 nu + j + 1)" in out
    assert "2 nu (2 nu + 2j + 1)" in out
    assert "1 + 4*nu + 4*nu^2" in out
    assert "FAIL" in out and "PASS" in out


def test_cli_output_file_and_env_dir(tmp_path, monkeypatch):
    out = tmp_path / "report.json"
    proc = run_cli("numbers", "--max-n", "2", "-o", str(out))
    assert proc.returncode == 0
    assert json.loads(out.read_text())["command"] == "numbers"

    import os

    env = dict(os.environ, WIGNERALG_OUTPUT_DIR=str(tmp_path))
    proc = run_cli("numbers", "--max-n", "2", "-o", "nested/out.json", env=env)
    assert proc.returncode == 0
    assert (tmp_path / "nested" / "out.json").exists()


def test_cli_verify_small():
    proc = run_cli(
        "verify", "--all", "--max-two-j", "2", "--dims", "4", "4", "--max-n", "4"
    )
    assert proc.returncode == 0
    assert "summary:" in proc.stdout
    assert " 0 fail" in proc.stdout


def test_cli_realizations_payload():
    proc = run_cli("realizations", "--max-n", "5")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["quasi_basis"][1]["text"] == "x - d"
    assert len(data["quasi_basis"]) == 6
    assert all(r["verdict"] != "fail" for r in data["reports"])


def test_cli_verify_json_exit_code_field():
    proc = run_cli(
        "verify", "--all", "--max-two-j", "2", "--dims", "4", "4", "--max-n", "4",
        "--format", "json",
    )
    data = json.loads(proc.stdout)
    assert data["exit_code"] == proc.returncode == 0
    assert data["summary"]["fail"] == 0
    assert set(data["sections"]) >= {"deformed-numbers", "su_nu2", "numeric-grid"}


def test_cli_verify_strict_flags_caveats():
    proc = run_cli(
        "verify", "--all", "--max-two-j", "2", "--dims", "4", "4", "--max-n", "4",
        "--strict",
    )
    assert proc.returncode == 1  # known caveats become failures under --strict
