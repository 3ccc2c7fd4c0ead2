"""Mellin transform on the critical line ``Re zeta = 1/2``.

With ``t = exp(u)`` the transform becomes a Fourier integral,

    phi(1/2 + i eta) = int g(u) exp(i eta u) du,   g(u) = exp(u/2) f(exp(u)),

which is evaluated by an FFT on the log grid. A half-line grid of ``M``
points with step ``du`` pairs with ``M + 1`` critical-line samples on
``[-pi/du, pi/du]``; the two end samples share the Nyquist bin with half
weight each, so forward and inverse are exact discrete inverses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridMismatch, TailError
from .fourier import cosine_transform, sine_transform
from .grid import CriticalLineFunction, HalfLineFunction, LogGrid
from .special import functional_kernel

DEFAULT_LOG_MIN = -60.0
DEFAULT_LOG_MAX = 20.0
DEFAULT_POINTS = 4096
TAPER_FRACTION = 0.02
FORWARD_TAIL_TOL = 1e-12
INVERSE_TAIL_TOL = 1e-10
# cosine/sine transforms carry ~1e-9 quadrature noise, amplified by sqrt(t) far out
TRANSFORM_TAIL_TOL = 1e-9


def default_log_grid(n_points=DEFAULT_POINTS):
    return LogGrid.spanning(DEFAULT_LOG_MIN, DEFAULT_LOG_MAX, n_points)


def taper(n, fraction=TAPER_FRACTION):
    """Raised-cosine window over the outer ``fraction`` of ``n`` samples."""
    w = np.ones(n)
    m = max(1, round(fraction * n))
    ramp = 0.5 * (1 - np.cos(np.pi * (np.arange(m) + 0.5) / m))
    w[:m] = ramp
    w[n - m :] = ramp[::-1]
    return w


def _tail_ratio(v):
    peak = np.max(np.abs(v))
    if peak == 0:
        return 0.0
    return float(max(abs(v[0]), abs(v[-1])) / peak)


def mellin_forward(f, check_tails=True, tail_tol=FORWARD_TAIL_TOL):
    """``phi(1/2 + i eta) = int_0^inf t^(-1/2 + i eta) f(t) dt`` on the dual eta grid.

    Raises
    ------
    TailError
        If ``t^(1/2) |f|`` at either end of the log grid exceeds ``tail_tol``
        times its peak.
    """
    grid = f.log_grid
    m = grid.n_points
    if m % 2:
        raise GridMismatch("the log grid needs an even number of points")
    g = np.exp(0.5 * grid.u) * f.values
    if check_tails:
        ratio = _tail_ratio(g)
        if ratio > tail_tol:
            raise TailError(f"half-line samples not decayed (end/peak = {ratio:.2e})", ratio)
    g = g * taper(m)
    k = np.arange(-(m // 2), m // 2 + 1)
    eta = grid.eta
    s = m * np.fft.ifft(g)  # sum_j g_j exp(+2 pi i k j / M)
    phi = grid.log_step * np.exp(1j * eta * grid.log_min) * s[k % m]
    return CriticalLineFunction(grid.eta_max, phi)


def mellin_inverse(phi, log_min=DEFAULT_LOG_MIN, check_tails=True):
    """``f(t) = (1/2 pi) int phi(1/2 + i eta) t^(-1/2 - i eta) d eta`` on the dual log grid.

    The critical-line grid fixes the log step (``pi / eta_max``) and the
    number of half-line points; ``log_min`` places the window.
    """
    n = phi.n_points
    m = n - 1
    if m % 2:
        raise GridMismatch("critical-line grids pair with even half-line grids (odd count)")
    grid = LogGrid(log_min, np.pi / phi.eta_max, m)
    v = np.asarray(phi.values)
    if check_tails:
        ratio = _tail_ratio(v)
        if ratio > INVERSE_TAIL_TOL:
            raise TailError(f"critical-line samples not decayed (end/peak = {ratio:.2e})", ratio)
    c = v * taper(n) * np.exp(-1j * phi.eta * log_min)
    k = np.arange(-(m // 2), m // 2 + 1)
    bins = np.zeros(m, dtype=complex)
    bins[k[1:-1] % m] = c[1:-1]
    bins[m // 2] = 0.5 * (c[0] + c[-1])
    g = np.fft.fft(bins) / (m * grid.log_step)
    return HalfLineFunction(log_min, grid.log_step, np.exp(-0.5 * grid.u) * g)


def mellin_inverse_at(phi, t, check_tails=True, chunk=256):
    """Inverse Mellin transform evaluated directly at arbitrary points ``t > 0``.

    This is the same tapered trapezoid sum as :func:`mellin_inverse`, summed
    at the requested abscissae instead of on the dual log grid, so no
    interpolation is involved.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise ValueError("inverse Mellin evaluation needs t > 0")
    v = np.asarray(phi.values)
    if check_tails:
        ratio = _tail_ratio(v)
        if ratio > INVERSE_TAIL_TOL:
            raise TailError(f"critical-line samples not decayed (end/peak = {ratio:.2e})", ratio)
    c = v * taper(phi.n_points) * phi.weights / (2 * np.pi)
    keep = c != 0
    eta, c = phi.eta[keep], c[keep]
    logt = np.log(t)
    out = np.empty(t.size, dtype=complex)
    for i in range(0, t.size, chunk):
        lt = logt[i : i + chunk]
        out[i : i + chunk] = np.exp(-0.5 * lt) * (np.exp(-1j * np.outer(lt, eta)) @ c)
    return out


@dataclass(frozen=True, eq=False)
class MellinPair:
    halfline: HalfLineFunction
    critical: CriticalLineFunction
    given: str  # "halfline" or "critical"

    @classmethod
    def from_halfline(cls, f):
        return cls(f, mellin_forward(f), "halfline")

    @classmethod
    def from_critical(cls, phi, log_min=DEFAULT_LOG_MIN):
        return cls(mellin_inverse(phi, log_min), phi, "critical")

    def parseval_sides(self):
        """``(int_0^inf |f|^2 dt, (1/2pi) int |phi|^2 d eta)``."""
        return self.halfline.norm2(), self.critical.norm2() / (2 * np.pi)

    def parseval_residual(self):
        a, b = self.parseval_sides()
        scale = max(a, b)
        return 0.0 if scale == 0 else abs(a - b) / scale


def mellin_functional_equation_check(f, kind):
    """Relative L2 mismatch between both sides of the cos/sin Mellin relation.

    The left side is the Mellin transform of the cosine (sine) transform of
    ``f``; the right side is ``phi_f(1 - zeta)`` times the Gamma-ratio kernel.
    On the critical line ``1 - zeta`` is the reflection ``eta -> -eta``.
    """
    if kind == "cos":
        transformed = cosine_transform(f)
    elif kind == "sin":
        transformed = sine_transform(f)
    else:
        raise ValueError(f"kind must be 'cos' or 'sin', got {kind!r}")
    lhs = mellin_forward(transformed, tail_tol=TRANSFORM_TAIL_TOL)
    phi = mellin_forward(f)
    rhs = phi.reflect().values * functional_kernel(0.5 + 1j * phi.eta, kind)
    diff = phi.with_values(lhs.values - rhs)
    denom = phi.with_values(rhs).norm2()
    return float(np.sqrt(diff.norm2() / denom)) if denom > 0 else float(np.sqrt(diff.norm2()))
