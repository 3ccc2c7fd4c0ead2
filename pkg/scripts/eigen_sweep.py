"""Fourier eigen-residual of each normalized Hermite function.

Shows where the sampled basis stops being an eigenbasis on a given grid.
"""

import argparse

from plancherel.config import RunConfig
from plancherel.fourier import fourier_operator
from plancherel.hermite import build_basis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=1024)
    ap.add_argument("--basis", type=int, default=120)
    ap.add_argument("--every", type=int, default=10, help="print every k-th index")
    args = ap.parse_args()

    grid = RunConfig(n_points=args.points).grid
    basis = build_basis(grid, args.basis)
    f = fourier_operator(grid)
    print(f"grid: N={grid.n_points} T={grid.half_width:.4f}")
    for n in range(0, args.basis, args.every):
        e = basis[n]
        r = (f.apply(e) - 1j**n * e).norm()
        print(f"n={n:>4}  residual={r:.2e}")


if __name__ == "__main__":
    main()
