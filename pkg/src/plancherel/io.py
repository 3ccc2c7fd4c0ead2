"""CSV/JSON readers and writers for the sampled function types.

Floats are written with 17 significant digits so that a write/read cycle is
lossless and repeated runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import GridMismatch
from .grid import CriticalLineFunction, GridFunction, GridSpec, HalfLineFunction
from .hermite import CoefficientVector

_FMT = "%.17g"


def write_columns(path, header, columns):
    """Write equal-length real columns as CSV under ``header``."""
    data = np.column_stack(columns)
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        np.savetxt(fh, data, fmt=_FMT, delimiter=",")


def _read_csv(path, expected_first):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ValueError(f"{path}: empty file") from None
        rows = [r for r in reader if r]
    if header[:1] != [expected_first] or header[1:3] != ["re", "im"]:
        raise ValueError(f"{path}: expected header {expected_first},re,im; got {','.join(header)}")
    try:
        data = np.array(rows, dtype=float)
    except ValueError as exc:
        raise ValueError(f"{path}: non-numeric entry ({exc})") from None
    if data.ndim != 2 or data.shape[1] < 3:
        raise ValueError(f"{path}: expected three columns")
    return data[:, 0], data[:, 1] + 1j * data[:, 2]


def write_grid_function(path, x):
    path = Path(path)
    if path.suffix == ".json":
        payload = {
            "half_width": x.half_width,
            "n_points": x.n_points,
            "values": [[float(v.real), float(v.imag)] for v in x.values],
        }
        path.write_text(json.dumps(payload))
    else:
        write_columns(path, ["t", "re", "im"], [x.t, x.values.real, x.values.imag])


def read_grid_function(path):
    path = Path(path)
    if path.suffix == ".json":
        payload = json.loads(path.read_text())
        grid = GridSpec(float(payload["half_width"]), int(payload["n_points"]))
        vals = np.array(payload["values"], dtype=float)
        return GridFunction(grid, vals[:, 0] + 1j * vals[:, 1])
    t, v = _read_csv(path, "t")
    if t.size < 4 or not np.allclose(t, -t[::-1], rtol=0, atol=1e-9 * abs(t[-1])):
        raise GridMismatch(f"{path}: abscissae are not a symmetric grid")
    grid = GridSpec(float(t[-1]), int(t.size))
    if not np.allclose(t, grid.t, rtol=0, atol=1e-9 * grid.half_width):
        raise GridMismatch(f"{path}: abscissae are not uniformly spaced")
    return GridFunction(grid, v)


def write_half_line(path, f):
    write_columns(path, ["t", "re", "im"], [f.t, f.values.real, f.values.imag])


def read_half_line(path):
    t, v = _read_csv(path, "t")
    return HalfLineFunction.from_samples(t, v)


def write_critical_line(path, phi):
    write_columns(path, ["eta", "re", "im"], [phi.eta, phi.values.real, phi.values.imag])


def read_critical_line(path):
    eta, v = _read_csv(path, "eta")
    if eta.size % 2 == 0:
        raise GridMismatch(f"{path}: critical-line files need an odd number of rows")
    phi = CriticalLineFunction(float(eta[-1]), v)
    if not np.allclose(eta, phi.eta, rtol=0, atol=1e-9 * phi.eta_max):
        raise GridMismatch(f"{path}: eta values are not a symmetric uniform grid")
    return phi


def write_basis(path, basis):
    header = ["t"] + [f"e{n}" for n in range(basis.size)]
    data = np.column_stack([basis.grid.t, basis.functions.T])
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        np.savetxt(fh, data, fmt=_FMT, delimiter=",")


def coefficients_to_json(c):
    return json.dumps([[float(v.real), float(v.imag)] for v in c.coeffs])


def coefficients_from_json(text):
    data = np.array(json.loads(text), dtype=float).reshape(-1, 2)
    return CoefficientVector(data[:, 0] + 1j * data[:, 1])
