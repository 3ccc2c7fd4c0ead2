"""Seeded families of test inputs used by the verification suites and the tests."""

from __future__ import annotations

import numpy as np

from .grid import CriticalLineFunction, GridFunction
from .hardy_titchmarsh import PsiFunction


def wave_packets(grid, count, seed=0, terms=3, spread=3.0):
    """Random smooth, decaying, band-limited functions on ``grid``.

    Each function is a sum of ``terms`` modulated Gaussians with centres and
    carrier frequencies in ``[-spread, spread]`` and widths in ``[0.7, 1.6]``.
    With the default spread both the function and its spectrum sit well
    inside the default grids; ``spread=1.5`` keeps the truncation error of
    a 48-term Hermite expansion around 1e-8.
    """
    rng = np.random.default_rng(seed)
    t = grid.t
    out = []
    for _ in range(count):
        v = np.zeros(grid.n_points, dtype=complex)
        for _ in range(terms):
            amp = rng.normal() + 1j * rng.normal()
            c = rng.uniform(-spread, spread)
            s = rng.uniform(0.7, 1.6)
            k = rng.uniform(-spread, spread)
            v += amp * np.exp(-0.5 * ((t - c) / s) ** 2 + 1j * k * t)
        out.append(GridFunction(grid, v))
    return out


def hermite_mixtures(basis, count, seed=0, top=None):
    """Random complex combinations of ``e_0 .. e_{top-1}``, returned with their coefficients."""
    rng = np.random.default_rng(seed)
    top = basis.size if top is None else top
    out = []
    for _ in range(count):
        c = np.zeros(basis.size, dtype=complex)
        c[:top] = rng.normal(size=top) + 1j * rng.normal(size=top)
        c /= np.linalg.norm(c)
        out.append((GridFunction(basis.grid, c @ basis.functions), c))
    return out


def random_psi(log_grid, parity, count, seed=0, terms=4):
    """Gaussian-damped random even or odd free parameters.

    ``psi(eta) = exp(-eta^2 / (2 sigma^2)) sum_q a_q cos(b_q eta)`` (or ``sin``
    with ``b_q`` kept away from zero for the odd case), with ``sigma`` in
    ``[4.5, 8]`` and ``b_q`` in ``[0, 0.5]``. Narrower damping gives the
    synthesized functions log-normal tails that are still around 1e-14 at
    ``t = 40``, which is above what the analysis step can tolerate.
    """
    rng = np.random.default_rng(seed)
    eta = log_grid.eta
    out = []
    for _ in range(count):
        sigma = rng.uniform(4.5, 8)
        a = rng.normal(size=terms)
        b = rng.uniform(0, 0.5, terms)
        damp = np.exp(-(eta**2) / (2 * sigma**2))
        if parity == "even":
            v = damp * sum(a[q] * np.cos(b[q] * eta) for q in range(terms))
        else:
            v = damp * sum(a[q] * np.sin((b[q] + 0.05) * eta) for q in range(terms))
        out.append(PsiFunction(CriticalLineFunction(log_grid.eta_max, v), parity))
    return out
