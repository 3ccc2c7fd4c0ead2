"""Accuracy of the critical-line Mellin transform as the log grid is refined.

Uses exp(-t), whose transform is Gamma(1/2 + i eta), and reports the
normwise error on |eta| <= 20 and the round-trip error.
"""

import argparse

import numpy as np

from plancherel.grid import LogGrid
from plancherel.mellin import mellin_forward, mellin_inverse
from plancherel.special import gamma


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, nargs="+", default=[1024, 2048, 4096, 8192])
    ap.add_argument("--log-min", type=float, default=-60.0)
    ap.add_argument("--log-max", type=float, default=20.0)
    args = ap.parse_args()

    print(f"{'M':>6} {'eta_max':>9} {'forward':>10} {'round trip':>11}")
    for m in args.points:
        lg = LogGrid.spanning(args.log_min, args.log_max, m)
        f = lg.sample(lambda t: np.exp(-t))
        phi = mellin_forward(f)
        window = np.abs(phi.eta) <= 20
        ref = gamma(0.5 + 1j * phi.eta[window])
        fwd = np.max(np.abs(phi.values[window] - ref)) / np.max(np.abs(ref))
        back = mellin_inverse(phi, log_min=args.log_min)
        rt = np.max(np.abs(back.values - f.values) * np.sqrt(f.t))
        print(f"{m:>6} {phi.eta_max:>9.2f} {fwd:>10.2e} {rt:>11.2e}")


if __name__ == "__main__":
    main()
