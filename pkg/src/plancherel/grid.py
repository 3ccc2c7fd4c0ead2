"""Sampled function types, quadrature and parity helpers.

Three sampled representations are used throughout:

* :class:`GridFunction` lives on a uniform symmetric grid over ``[-T, T]``.
* :class:`HalfLineFunction` lives on a logarithmic grid ``t_j = exp(u0 + j*du)``.
* :class:`CriticalLineFunction` holds ``phi(1/2 + i*eta)`` on a symmetric
  uniform ``eta`` grid with an odd number of points.

All of them are immutable; the sample arrays are marked read-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import GridMismatch, ResolutionError

# Cubic interpolation in ln t is only trusted below this log step.
MAX_LOG_STEP = 0.05


def _frozen(values, dtype=complex):
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class GridSpec:
    """Uniform symmetric grid ``t_j = -T + j*dt`` with ``dt = 2T/(N-1)``."""

    half_width: float
    n_points: int

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 4:
            raise ResolutionError(f"grid needs at least 4 points, got {self.n_points}")
        if self.n_points % 2:
            raise ResolutionError(f"grid point count must be even, got {self.n_points}")
        if not self.half_width > 0:
            raise ResolutionError(f"half width must be positive, got {self.half_width}")

    @classmethod
    def self_dual(cls, n_points=1024):
        """Grid whose step satisfies ``dt**2 * N = 2*pi``.

        On this grid the t-axis and the frequency axis coincide exactly, so
        the sampled Fourier kernel is the centred unitary DFT.
        """
        step = np.sqrt(2 * np.pi / n_points)
        return cls(half_width=float(0.5 * (n_points - 1) * step), n_points=int(n_points))

    @property
    def step(self):
        return 2.0 * self.half_width / (self.n_points - 1)

    @cached_property
    def t(self):
        # centred index keeps t_j == -t_{N-1-j} bit for bit
        j = np.arange(self.n_points) - 0.5 * (self.n_points - 1)
        t = j * self.step
        t.setflags(write=False)
        return t

    @cached_property
    def weights(self):
        """Trapezoid weights: ``dt`` inside, ``dt/2`` at both ends."""
        w = np.full(self.n_points, self.step)
        w[0] = w[-1] = 0.5 * self.step
        w.setflags(write=False)
        return w

    @property
    def is_self_dual(self):
        return abs(self.step**2 * self.n_points / (2 * np.pi) - 1.0) < 1e-12

    @property
    def nyquist(self):
        """Largest angular frequency representable on the grid."""
        return np.pi / self.step

    def zeros(self):
        return GridFunction(self, np.zeros(self.n_points, dtype=complex))

    def sample(self, func):
        """Sample a vectorised callable on the grid."""
        return GridFunction(self, np.asarray(func(self.t), dtype=complex))


@dataclass(frozen=True, eq=False)
class GridFunction:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = _frozen(self.values)
        if values.shape != (self.grid.n_points,):
            raise GridMismatch(
                f"expected {self.grid.n_points} samples, got shape {values.shape}"
            )
        object.__setattr__(self, "values", values)

    @property
    def t(self):
        return self.grid.t

    @property
    def half_width(self):
        return self.grid.half_width

    @property
    def n_points(self):
        return self.grid.n_points

    @property
    def weight(self):
        return self.grid.step

    def norm(self):
        return float(np.sqrt(inner_product(self, self).real))

    def reflect(self):
        """The function ``t -> x(-t)``."""
        return GridFunction(self.grid, self.values[::-1])

    def even_part(self):
        return GridFunction(self.grid, 0.5 * (self.values + self.values[::-1]))

    def odd_part(self):
        return GridFunction(self.grid, 0.5 * (self.values - self.values[::-1]))

    def with_values(self, values):
        return GridFunction(self.grid, values)

    def _check(self, other):
        if not isinstance(other, GridFunction):
            return NotImplemented
        if other.grid != self.grid:
            raise GridMismatch(f"{self.grid} vs {other.grid}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GridFunction(self.grid, self.values + other.values)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GridFunction(self.grid, self.values - other.values)

    def __neg__(self):
        return GridFunction(self.grid, -self.values)

    def __mul__(self, scalar):
        if isinstance(scalar, GridFunction):
            return NotImplemented
        return GridFunction(self.grid, scalar * self.values)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return GridFunction(self.grid, self.values / scalar)


def inner_product(f, g):
    """Trapezoid approximation of ``<f, g> = integral f(t) conj(g(t)) dt``."""
    if f.grid != g.grid:
        raise GridMismatch(f"{f.grid} vs {g.grid}")
    return complex(np.vdot(g.values, f.grid.weights * f.values))


def half_line_norm2(x):
    """``integral_0^inf |x(t)|^2 dt`` from samples on a symmetric grid."""
    t = x.t
    w = np.where(t > 0, 1.0, np.where(t == 0, 0.5, 0.0)) * x.grid.weights
    return float(np.sum(w * np.abs(x.values) ** 2))


@dataclass(frozen=True)
class LogGrid:
    """Logarithmic half-line grid ``t_j = exp(log_min + j*log_step)``.

    It is paired with a critical-line grid of ``n_points + 1`` samples
    spanning ``[-pi/log_step, pi/log_step]``, the discrete Fourier dual of
    the log variable.
    """

    log_min: float
    log_step: float
    n_points: int

    def __post_init__(self):
        if not self.log_step > 0:
            raise ResolutionError(f"log step must be positive, got {self.log_step}")
        if self.n_points < 4 or self.n_points % 2:
            raise ResolutionError(
                f"log grid needs an even number (>=4) of points, got {self.n_points}"
            )

    @classmethod
    def spanning(cls, log_min, log_max, n_points):
        return cls(log_min, (log_max - log_min) / n_points, int(n_points))

    @cached_property
    def u(self):
        u = self.log_min + self.log_step * np.arange(self.n_points)
        u.setflags(write=False)
        return u

    @cached_property
    def t(self):
        t = np.exp(self.u)
        t.setflags(write=False)
        return t

    @property
    def eta_max(self):
        return np.pi / self.log_step

    @property
    def n_eta(self):
        return self.n_points + 1

    @cached_property
    def eta(self):
        return critical_eta(self.eta_max, self.n_eta)

    def sample(self, func):
        return HalfLineFunction(self.log_min, self.log_step, func(self.t))


def critical_eta(eta_max, n_points):
    eta = eta_max * np.linspace(-1.0, 1.0, n_points)
    eta[n_points // 2] = 0.0
    eta.setflags(write=False)
    return eta


@dataclass(frozen=True, eq=False)
class HalfLineFunction:
    log_min: float
    log_step: float
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))
        if not self.log_step > 0:
            raise ResolutionError("log step must be positive")
        if self.values.ndim != 1 or self.values.size < 1:
            raise GridMismatch("half-line samples must be a non-empty 1-D array")

    @property
    def n_points(self):
        return self.values.size

    @cached_property
    def log_grid(self):
        return LogGrid(self.log_min, self.log_step, self.n_points)

    @property
    def u(self):
        return self.log_grid.u

    @property
    def t(self):
        return self.log_grid.t

    def norm2(self):
        """Squared L2(0, inf) norm; ``dt = t du`` gives weights ``t_j * du``."""
        return float(self.log_step * np.sum(self.t * np.abs(self.values) ** 2))

    def norm(self):
        return float(np.sqrt(self.norm2()))

    def with_values(self, values):
        return HalfLineFunction(self.log_min, self.log_step, values)

    @classmethod
    def from_samples(cls, t, values, rtol=1e-9):
        """Recover the log-grid parameters from explicit abscissae."""
        t = np.asarray(t, dtype=float)
        if t.size < 2 or np.any(t <= 0) or np.any(np.diff(t) <= 0):
            raise GridMismatch("half-line abscissae must be positive and strictly increasing")
        u = np.log(t)
        j = np.arange(t.size)
        slope, intercept = np.polyfit(j, u, 1)
        dev = np.max(np.abs(u - (intercept + slope * j)))
        if dev > rtol * max(abs(u[-1] - u[0]), 1.0):
            raise GridMismatch(f"abscissae are not log-uniform (deviation {dev:.3g})")
        return cls(float(intercept), float(slope), values)


@dataclass(frozen=True, eq=False)
class CriticalLineFunction:
    """Samples of ``phi(1/2 + i*eta)`` on ``M`` (odd) uniform points in [-H, H]."""

    eta_max: float
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))
        if self.values.ndim != 1 or self.values.size % 2 == 0:
            raise GridMismatch(
                f"critical-line sample count must be odd, got {self.values.size}"
            )
        if not self.eta_max > 0:
            raise ResolutionError("eta_max must be positive")

    @property
    def n_points(self):
        return self.values.size

    @cached_property
    def eta(self):
        return critical_eta(self.eta_max, self.n_points)

    @property
    def eta_step(self):
        return 2.0 * self.eta_max / (self.n_points - 1)

    @cached_property
    def weights(self):
        w = np.full(self.n_points, self.eta_step)
        w[0] = w[-1] = 0.5 * self.eta_step
        w.setflags(write=False)
        return w

    def norm2(self):
        return float(np.sum(self.weights * np.abs(self.values) ** 2))

    def reflect(self):
        """``eta -> phi(1/2 - i*eta)``, i.e. ``zeta -> 1 - zeta`` on the line."""
        return CriticalLineFunction(self.eta_max, self.values[::-1])

    def with_values(self, values):
        return CriticalLineFunction(self.eta_max, values)

    @classmethod
    def sample(cls, func, eta_max, n_points):
        return cls(eta_max, func(critical_eta(eta_max, n_points)))

    def resample(self, eta_max, n_points):
        """Cubic interpolation onto another symmetric grid, zero outside [-H, H]."""
        if eta_max == self.eta_max and n_points == self.n_points:
            return self
        eta = critical_eta(eta_max, n_points)
        spline = CubicSpline(self.eta, self.values)
        inside = np.abs(eta) <= self.eta_max
        out = np.zeros(n_points, dtype=complex)
        out[inside] = spline(eta[inside])
        return CriticalLineFunction(eta_max, out)


def extend_to_line(f, parity, grid):
    """Extend a half-line function to ``grid`` as an even or odd function.

    Values between half-line samples come from a cubic spline in ``u = ln t``.
    Below the smallest sample the value at that sample is held constant; above
    the largest sample the function is taken as zero. A sample sitting exactly
    at ``t = 0`` is set to zero for odd parity.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    if f.log_step > MAX_LOG_STEP:
        raise ResolutionError(
            f"log step {f.log_step:.3g} exceeds {MAX_LOG_STEP} for cubic interpolation"
        )
    t_half = f.t
    inside_target = (t_half >= 0.5 * grid.step) & (t_half <= grid.half_width)
    if np.count_nonzero(inside_target) < 4:
        raise ResolutionError("half-line samples do not resolve the target grid range")

    spline = CubicSpline(f.u, f.values)
    r = np.abs(grid.t)
    vals = np.zeros(grid.n_points, dtype=complex)
    low = (r > 0) & (r < t_half[0])
    mid = (r >= t_half[0]) & (r <= t_half[-1])
    vals[low] = f.values[0]
    vals[mid] = spline(np.log(r[mid]))
    if parity == "odd":
        vals = np.where(grid.t < 0, -vals, vals)
        vals[grid.t == 0] = 0.0
    else:
        vals[grid.t == 0] = f.values[0]
    return GridFunction(grid, vals)


def trig_interpolate(x, points):
    """Evaluate the trigonometric interpolant of ``x`` at arbitrary points.

    The grid samples are treated as one period of length ``N*dt``; for
    functions that vanish at both ends this interpolant is spectrally accurate.
    """
    grid = x.grid
    n = grid.n_points
    coef = np.fft.fft(x.values) / n
    k = np.fft.fftfreq(n, d=1.0 / n)
    # split the Nyquist mode evenly between +/- so real data stay real
    nyq = n // 2
    s = (np.asarray(points, dtype=float) - grid.t[0]) * (2 * np.pi / (n * grid.step))
    c_nyq = coef[nyq]
    coef = coef.copy()
    coef[nyq] = 0.0
    out = np.empty(s.shape, dtype=complex)
    chunk = 512
    for i in range(0, s.size, chunk):
        si = s[i : i + chunk]
        out[i : i + chunk] = np.exp(1j * np.outer(si, k)) @ coef + c_nyq * np.cos(nyq * si)
    return out


def restrict_to_half_line(x, log_grid):
    """Sample ``x`` at the positive log-grid points (zero beyond ``T``)."""
    t = log_grid.t
    vals = np.zeros(t.size, dtype=complex)
    inside = t <= x.half_width
    vals[inside] = trig_interpolate(x, t[inside])
    return HalfLineFunction(log_grid.log_min, log_grid.log_step, vals)
