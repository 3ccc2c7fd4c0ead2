"""Compare the sampled Fourier operator on fixed-width grids with the self-dual grid.

For each grid this prints the unitarity defect of the dense matrix and the
worst Hermite eigen-residual over the first ``--basis`` functions.
"""

import argparse

import numpy as np

from plancherel.errors import ResolutionError
from plancherel.fourier import fourier_operator
from plancherel.grid import GridSpec
from plancherel.hermite import build_basis


def describe(grid, size):
    f = fourier_operator(grid, method="dense").matrix
    unit = np.max(np.abs(f.conj().T @ f - np.eye(grid.n_points)))
    try:
        basis = build_basis(grid, size)
    except ResolutionError as exc:
        return unit, f"unresolved ({exc})"
    worst = 0.0
    for n in range(size):
        y = f @ basis.functions[n]
        worst = max(worst, np.linalg.norm(y - 1j**n * basis.functions[n]) * np.sqrt(grid.step))
    return unit, f"{worst:.2e}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, nargs="+", default=[256, 512, 1024])
    ap.add_argument("--half-widths", type=float, nargs="+", default=[12.0, 20.0])
    ap.add_argument("--basis", type=int, default=32)
    args = ap.parse_args()

    print(f"{'N':>6} {'T':>10} {'|F*F - I|':>12} {'eigen residual':>16}")
    for n in args.points:
        grids = [GridSpec(t, n) for t in args.half_widths] + [GridSpec.self_dual(n)]
        for g in grids:
            unit, eig = describe(g, args.basis)
            tag = " (self-dual)" if g.is_self_dual else ""
            print(f"{n:>6} {g.half_width:>10.4f} {unit:>12.2e} {eig:>16}{tag}")


if __name__ == "__main__":
    main()
