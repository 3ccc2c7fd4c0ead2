"""Hermite functions, ladder operators and the Hermite operator on a grid.

Derivatives are spectral: the grid samples are treated as one period of a
periodic function, which is exact to tolerance for functions that vanish at
both ends of the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GridMismatch, ResolutionError
from .grid import GridFunction

# an e_n is "resolved" if it is below this at the grid edge and at the Nyquist frequency
EDGE_TOL = 1e-12
REORTHO_TOL = 1e-11
DECAY_SLOPE = -1.5


def _wavenumbers(grid):
    return 2 * np.pi * np.fft.fftfreq(grid.n_points, d=grid.step)


def spectral_derivative(x, order=1):
    k = _wavenumbers(x.grid)
    if order == 1:
        mult = 1j * k
        mult[x.n_points // 2] = 0.0  # Nyquist mode has no odd derivative
    elif order == 2:
        mult = -(k**2)
    else:
        raise ValueError("only first and second derivatives are supported")
    return x.with_values(np.fft.ifft(mult * np.fft.fft(x.values)))


def apply_raising(x):
    """Creation operator: ``-dx/dt + t x``."""
    return x.with_values(-spectral_derivative(x).values + x.t * x.values)


def apply_lowering(x):
    """Annihilation operator: ``dx/dt + t x``."""
    return x.with_values(spectral_derivative(x).values + x.t * x.values)


def apply_hermite_operator(x):
    """``-x'' + t^2 x``."""
    return x.with_values(-spectral_derivative(x, 2).values + x.t**2 * x.values)


def ground_state(grid):
    """Unnormalised ``h_0(t) = exp(-t^2/2)``, the kernel of the lowering operator."""
    return grid.sample(lambda t: np.exp(-0.5 * t * t))


def raw_ladder_iterates(grid, n):
    """``[h_0, ..., h_n]`` with ``h_{k+1}`` obtained by applying the raising operator.

    The norms grow like ``sqrt(sqrt(pi) 2^k k!)``; keep ``n`` modest.
    """
    out = [ground_state(grid)]
    for _ in range(n):
        out.append(apply_raising(out[-1]))
    return out


def raw_norm2(n):
    """``<h_n, h_n> = sqrt(pi) 2^n n!``."""
    from math import factorial

    return np.sqrt(np.pi) * 2.0**n * factorial(n)


def edge_magnitude(n_max, r):
    """``max_{n <= n_max} |e_n(r)|`` via a rescaled recurrence (no underflow)."""
    log_scale = -0.5 * r * r - 0.25 * np.log(np.pi)
    prev, cur = 0.0, 1.0
    best = log_scale
    for n in range(n_max):
        prev, cur = cur, np.sqrt(2.0 / (n + 1)) * r * cur - np.sqrt(n / (n + 1)) * prev
        mag = max(abs(cur), abs(prev))
        if mag > 1e100:
            prev, cur = prev / mag, cur / mag
            log_scale += np.log(mag)
        if cur != 0:
            best = max(best, log_scale + np.log(abs(cur)))
    return float(np.exp(best))


def check_resolution(grid, size):
    """Raise if ``e_0 .. e_{size-1}`` are not negligible at the grid edge.

    Hermite functions are their own Fourier transforms up to a phase, so the
    same bound also covers the frequency side (``pi/dt``).
    """
    r = min(grid.half_width, grid.nyquist)
    mag = edge_magnitude(size - 1, r)
    if mag > EDGE_TOL:
        raise ResolutionError(
            f"basis size {size} not resolved on {grid}: |e_n| reaches {mag:.2e} at r={r:.3g}"
        )


@dataclass(frozen=True, eq=False)
class HermiteBasis:
    grid: object
    functions: np.ndarray  # shape (size, N), real

    def __post_init__(self):
        f = np.array(self.functions, dtype=float)
        f.setflags(write=False)
        object.__setattr__(self, "functions", f)

    @property
    def size(self):
        return self.functions.shape[0]

    @cached_property
    def hermite_eigs(self):
        return [2 * n + 1 for n in range(self.size)]

    @cached_property
    def fourier_eigs(self):
        return [(1, 1j, -1, -1j)[n % 4] for n in range(self.size)]

    def __getitem__(self, n):
        return GridFunction(self.grid, self.functions[n])

    def __len__(self):
        return self.size

    def gram(self):
        return (self.functions * self.grid.weights) @ self.functions.T


def _reorthonormalize(funcs, weights):
    for parity in (0, 1):
        idx = range(parity, funcs.shape[0], 2)
        done = []
        for n in idx:
            v = funcs[n]
            for m in done:
                v = v - np.dot(funcs[m] * weights, v) * funcs[m]
            funcs[n] = v / np.sqrt(np.dot(v * weights, v))
            done.append(n)
    return funcs


def build_basis(grid, size):
    """Orthonormal Hermite functions ``e_0 .. e_{size-1}`` sampled on ``grid``.

    Uses the normalised three-term recurrence
    ``e_{n+1} = sqrt(2/(n+1)) t e_n - sqrt(n/(n+1)) e_{n-1}`` starting from
    ``e_0 = pi^(-1/4) exp(-t^2/2)``. Each ``e_n`` is a positive multiple of
    the n-th raising-operator iterate of ``e_0``.
    """
    if size < 1:
        raise ValueError("basis size must be positive")
    check_resolution(grid, size)
    t = grid.t
    funcs = np.empty((size, grid.n_points))
    funcs[0] = np.pi**-0.25 * np.exp(-0.5 * t * t)
    prev = np.zeros_like(t)
    for n in range(size - 1):
        funcs[n + 1] = np.sqrt(2.0 / (n + 1)) * t * funcs[n] - np.sqrt(n / (n + 1)) * prev
        prev = funcs[n]
    gram = (funcs * grid.weights) @ funcs.T
    if np.max(np.abs(gram - np.eye(size))) > REORTHO_TOL:
        funcs = _reorthonormalize(funcs, grid.weights)
    return HermiteBasis(grid, funcs)


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim != 1 or not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be a finite 1-D array")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __len__(self):
        return self.coeffs.size

    def norm2(self):
        return float(np.sum(np.abs(self.coeffs) ** 2))


def expand(x, basis):
    """Coefficients ``c_n = <x, e_n>``."""
    if x.grid != basis.grid:
        raise GridMismatch(f"{x.grid} vs {basis.grid}")
    return CoefficientVector(basis.functions @ (x.grid.weights * x.values))


def synthesize(c, basis):
    """``sum_n c_n e_n``."""
    coeffs = c.coeffs if isinstance(c, CoefficientVector) else np.asarray(c, dtype=complex)
    if coeffs.size > basis.size:
        raise GridMismatch(f"{coeffs.size} coefficients for a basis of {basis.size}")
    return GridFunction(basis.grid, coeffs @ basis.functions[: coeffs.size])


@dataclass(frozen=True)
class DomainReport:
    in_domain_score: float
    half_truncation_score: float
    tail_slope: float
    classification: str

    @property
    def growth_ratio(self):
        if self.half_truncation_score == 0:
            return 1.0
        return self.in_domain_score / self.half_truncation_score


def domain_diagnostic(c, noise_floor=1e-12):
    """Heuristic check of ``sum (2n+1)^2 |c_n|^2 < inf`` from a truncated vector.

    The truncated weighted sum is reported at full and half length. The tail
    trend is the least-squares slope of ``log|c_n|`` against ``log(n+1)`` over
    the last three quarters of the indices, ignoring entries below
    ``noise_floor * max|c|``; a slope below -1.5 (or an empty tail) is
    classified as "decaying".
    """
    coeffs = c.coeffs if isinstance(c, CoefficientVector) else np.asarray(c, dtype=complex)
    n = np.arange(coeffs.size)
    w = (2 * n + 1.0) ** 2 * np.abs(coeffs) ** 2
    half = max(1, coeffs.size // 2)
    mag = np.abs(coeffs)
    floor = noise_floor * mag.max(initial=0.0)
    tail = (n >= max(1, coeffs.size // 4)) & (mag > floor)
    if np.count_nonzero(tail) < 3:
        slope = -np.inf
    else:
        slope = float(np.polyfit(np.log(n[tail] + 1.0), np.log(mag[tail]), 1)[0])
    return DomainReport(
        in_domain_score=float(w.sum()),
        half_truncation_score=float(w[:half].sum()),
        tail_slope=slope,
        classification="decaying" if slope < DECAY_SLOPE else "non-decaying",
    )
