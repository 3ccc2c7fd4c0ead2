"""Measure the half-line / weighted-psi Parseval ratio in each eigenspace.

Prints the ratio for the first Hermite functions and for a few random
eigenfunctions, next to 1/(2 pi).
"""

import argparse

import numpy as np

from plancherel.config import RunConfig
from plancherel.eigenspace import EigenLabel
from plancherel.hardy_titchmarsh import (
    analyze_eigenfunction,
    parseval_psi_check,
    synthesize_eigenfunction,
)
from plancherel.hermite import build_basis
from plancherel.testsets import random_psi


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--hermite", type=int, default=8, help="number of Hermite functions")
    ap.add_argument("--random", type=int, default=3, help="random eigenfunctions per eigenvalue")
    args = ap.parse_args()

    cfg = RunConfig()
    grid, lg = cfg.grid, cfg.log_grid
    basis = build_basis(grid, max(args.hermite, 1))
    print(f"1/(2 pi) = {1 / (2 * np.pi):.15f}")
    print(f"{'source':>12} {'lambda':>6} {'shift':>6} {'ratio':>20} {'ratio*2pi':>12}")
    for n in range(args.hermite):
        label = EigenLabel.of_index(n)
        psi = analyze_eigenfunction(basis[n], label, lg)
        r = parseval_psi_check(basis[n], psi, label)
        print(f"{'e' + str(n):>12} {label!s:>6} {r.gamma_shift:>6} {r.ratio:>20.15f} {2 * np.pi * r.ratio:>12.9f}")
    for label in EigenLabel:
        for k, psi in enumerate(random_psi(lg, label.psi_parity, args.random, seed=500 + label.power)):
            x = synthesize_eigenfunction(psi, label, grid)
            back = analyze_eigenfunction(x, label, lg)
            r = parseval_psi_check(x, back, label)
            print(f"{'random' + str(k):>12} {label!s:>6} {r.gamma_shift:>6} {r.ratio:>20.15f} {2 * np.pi * r.ratio:>12.9f}")


if __name__ == "__main__":
    main()
