import json
import subprocess
import sys

import numpy as np
import pytest

from plancherel import io
from plancherel.cli import main
from plancherel.grid import CriticalLineFunction
from plancherel.special import gamma
from plancherel.verify import validate_report


@pytest.fixture
def files(tmp_path, grid, log_grid):
    gauss = tmp_path / "gauss.csv"
    io.write_grid_function(gauss, grid.sample(lambda t: np.exp(-0.5 * t * t)))
    mixed = tmp_path / "mixed.csv"
    io.write_grid_function(mixed, grid.sample(lambda t: np.exp(-0.5 * (t - 1) ** 2)))
    expo = tmp_path / "exp.csv"
    io.write_half_line(expo, log_grid.sample(lambda t: np.exp(-t)))
    const = tmp_path / "const.csv"
    io.write_critical_line(const, CriticalLineFunction(log_grid.eta_max, np.full(log_grid.n_eta, 2**-0.75)))
    return {"gauss": gauss, "mixed": mixed, "exp": expo, "const": const, "dir": tmp_path}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def summary(text):
    data = json.loads(text)
    validate_report(data)
    return data


def test_verify_gamma(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "gamma", "--json-report", report)
    assert code == 0
    assert "PASS gamma.cosine" in out
    data = json.loads(report.read_text())
    validate_report(data)
    assert data["passed"]


def test_verify_bad_grid(capsys):
    code, _, err = run(capsys, "verify", "all", "--grid-points", 8)
    assert code == 2
    assert "error" in err


def test_verify_relaxed_tolerance_recorded(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "fourier", "--tol", "fourier.eigen=1e-3", "--json-report", report)
    assert code == 0
    data = json.loads(report.read_text())
    assert data["config"]["tolerances"] == {"fourier.eigen": 1e-3}
    eig = [c for c in data["checks"] if c["name"].startswith("fourier.eigen")]
    assert eig and all(c["tolerance"] == 1e-3 for c in eig)


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "gamma", "--tol", "gamma.sine=1e-30")
    assert code == 1
    assert "FAIL gamma.sine" in out


def test_unknown_tolerance_name(capsys):
    code, _, _ = run(capsys, "verify", "gamma", "--tol", "gamma.nonsense=1")
    assert code == 2


def test_malformed_tolerance(capsys):
    code, _, _ = run(capsys, "verify", "gamma", "--tol", "gamma.sine")
    assert code == 2


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"n_points": 2048, "tolerances": {"gamma.sine": 1e-3}}))
    report = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "gamma", "--config", cfg, "--grid-points", 1024,
                     "--json-report", report)
    assert code == 0
    data = json.loads(report.read_text())
    assert data["config"]["n_points"] == 1024
    assert data["config"]["tolerances"] == {"gamma.sine": 1e-3}


def test_transform_fourier_fixed_point(capsys, files):
    out_path = files["dir"] / "f.csv"
    code, out, _ = run(capsys, "transform", "fourier", "--in", files["gauss"], "--out", out_path)
    assert code == 0
    res = summary(out)["results"]
    assert abs(res["input_norm"] - res["output_norm"]) < 1e-9 * res["input_norm"]
    x = io.read_grid_function(files["gauss"])
    y = io.read_grid_function(out_path)
    assert (x - y).norm() < 1e-9


def test_transform_fourier_inverse(capsys, files):
    fwd = files["dir"] / "f.csv"
    back = files["dir"] / "b.csv"
    run(capsys, "transform", "fourier", "--in", files["mixed"], "--out", fwd)
    code, _, _ = run(capsys, "transform", "fourier", "--direction", "inverse", "--in", fwd, "--out", back)
    assert code == 0
    x = io.read_grid_function(files["mixed"])
    assert (io.read_grid_function(back) - x).norm() < 1e-9 * x.norm()


def test_transform_mellin_forward(capsys, files):
    out_path = files["dir"] / "phi.csv"
    code, _, _ = run(capsys, "transform", "mellin", "--in", files["exp"], "--out", out_path)
    assert code == 0
    phi = io.read_critical_line(out_path)
    m = np.abs(phi.eta) <= 20
    ref = gamma(0.5 + 1j * phi.eta[m])
    assert np.max(np.abs(phi.values[m] - ref)) < 1e-8 * np.max(np.abs(ref))


def test_transform_mellin_inverse(capsys, files):
    phi = files["dir"] / "phi.csv"
    back = files["dir"] / "back.csv"
    run(capsys, "transform", "mellin", "--in", files["exp"], "--out", phi)
    code, out, _ = run(capsys, "transform", "mellin", "--direction", "inverse", "--in", phi, "--out", back)
    assert code == 0
    res = summary(out)["results"]
    assert res["input_norm"] == pytest.approx(res["output_norm"], rel=1e-6)
    f = io.read_half_line(back)
    assert np.max(np.abs(f.values - np.exp(-f.t)) * np.sqrt(f.t)) < 1e-7


def test_transform_cosine(capsys, files):
    out_path = files["dir"] / "c.csv"
    code, _, _ = run(capsys, "transform", "cosine", "--in", files["exp"], "--out", out_path)
    assert code == 0
    g = io.read_half_line(out_path)
    assert np.max(np.abs(g.values - np.sqrt(2 / np.pi) / (1 + g.t**2))) < 1e-7


def test_transform_cosine_inverse_is_usage_error(capsys, files):
    code, _, _ = run(capsys, "transform", "cosine", "--direction", "inverse", "--in", files["exp"])
    assert code == 2


def test_transform_engine_error(capsys, files, log_grid):
    slow = files["dir"] / "slow.csv"
    io.write_half_line(slow, log_grid.sample(lambda t: 1 / (1 + t)))
    code, _, err = run(capsys, "transform", "mellin", "--in", slow)
    assert code == 3
    assert "TailError" in err


def test_missing_input(capsys, files):
    code, _, err = run(capsys, "transform", "fourier", "--in", files["dir"] / "nope.csv")
    assert code == 2
    assert "no such file" in err


def test_unparseable_input(capsys, files):
    bad = files["dir"] / "bad.csv"
    bad.write_text("t,re,im\n1,x,2\n")
    code, _, _ = run(capsys, "transform", "fourier", "--in", bad)
    assert code == 2


def test_project_single_label(capsys, files):
    out_path = files["dir"] / "p.csv"
    code, out, _ = run(capsys, "project", "--in", files["mixed"], "--lambda", "i", "--out", out_path)
    assert code == 0
    res = summary(out)["results"]
    assert res["label"] == "i"
    p = io.read_grid_function(out_path)
    assert p.norm() == pytest.approx(res["norm[i]"], rel=1e-12)


def test_project_all_labels(capsys, files):
    out_path = files["dir"] / "p.csv"
    code, out, _ = run(capsys, "project", "--in", files["mixed"], "--out", out_path)
    assert code == 0
    res = summary(out)["results"]
    total = sum(res[f"norm[{k}]"] ** 2 for k in ("1", "i", "-1", "-i"))
    assert total == pytest.approx(res["input_norm"] ** 2, rel=1e-9)
    header = out_path.read_text().splitlines()[0]
    assert header == "t,re[1],im[1],re[i],im[i],re[-1],im[-1],re[-i],im[-i]"


def test_project_bad_label(capsys, files):
    code, _, _ = run(capsys, "project", "--in", files["mixed"], "--lambda", "2")
    assert code == 2


def test_synthesize_gaussian(capsys, files, grid):
    out_path = files["dir"] / "x.csv"
    code, out, _ = run(capsys, "synthesize", "--lambda", "1", "--psi", files["const"], "--out", out_path)
    assert code == 0
    assert summary(out)["results"]["eigen_residual"] < 1e-5
    x = io.read_grid_function(out_path)
    g = grid.sample(lambda t: np.exp(-0.5 * t * t))
    assert (x - g).norm() < 1e-6 * g.norm()


def test_synthesize_parity_mismatch(capsys, files):
    code, _, err = run(capsys, "synthesize", "--lambda", "-1", "--psi", files["const"])
    assert code == 3
    assert "ParityError" in err


def test_analyze_then_synthesize(capsys, files):
    psi = files["dir"] / "psi.csv"
    code, out, _ = run(capsys, "analyze", "--lambda", "1", "--in", files["gauss"], "--out", psi)
    assert code == 0
    res = summary(out)["results"]
    assert res["parity"] == "even" and res["truncated"] and res["stable_eta"] >= 15
    back = files["dir"] / "back.csv"
    code, _, _ = run(capsys, "synthesize", "--lambda", "1", "--psi", psi, "--out", back)
    assert code == 0
    x = io.read_grid_function(files["gauss"])
    assert (io.read_grid_function(back) - x).norm() < 1e-5 * x.norm()


def test_analyze_non_eigenfunction(capsys, files):
    code, _, err = run(capsys, "analyze", "--lambda", "i", "--in", files["gauss"])
    assert code == 3
    assert "NotEigenfunctionError" in err


def test_basis_export(capsys, files, grid):
    out_path = files["dir"] / "basis.csv"
    code, out, _ = run(capsys, "basis", "--n", 48, "--out", out_path)
    assert code == 0
    assert summary(out)["results"]["orthonormality"] < 1e-10
    data = np.loadtxt(out_path, delimiter=",", skiprows=1)
    assert data.shape == (grid.n_points, 49)


@pytest.mark.parametrize(
    "argv",
    [["basis", "--n", "100", "--grid-half-width", "12"], ["basis", "--n", "2000"]],
)
def test_basis_unresolved(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "not resolved" in err


def test_basis_non_positive(capsys):
    code, _, _ = run(capsys, "basis", "--n", 0)
    assert code == 2


def test_outputs_are_deterministic(capsys, files):
    a = files["dir"] / "a.csv"
    b = files["dir"] / "b.csv"
    ra = files["dir"] / "ra.json"
    rb = files["dir"] / "rb.json"
    run(capsys, "project", "--in", files["mixed"], "--out", a, "--json-report", ra)
    run(capsys, "project", "--in", files["mixed"], "--out", b, "--json-report", rb)
    assert a.read_bytes() == b.read_bytes()
    assert ra.read_bytes() == rb.read_bytes()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "plancherel.cli", "verify", "gamma"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "gamma.reflection" in proc.stdout
