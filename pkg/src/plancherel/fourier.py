"""Sampled Fourier-Plancherel operator and half-line cosine/sine transforms.

The kernel is ``exp(+i t xi) / sqrt(2 pi)``; with this sign the Hermite
function ``e_n`` has eigenvalue ``i**n``. The t-grid doubles as the xi-grid.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.signal import czt

from .errors import GridMismatch
from .grid import GridFunction, HalfLineFunction
from .hermite import apply_hermite_operator

FFT_THRESHOLD = 2048


class FourierOperator:
    """The matrix ``F_jk = dt exp(i t_j t_k) / sqrt(2 pi)`` and its fast path.

    ``method`` is ``"dense"``, ``"fft"`` (chirp-z) or ``"auto"``, which uses
    the chirp-z path for ``N >= 2048``.
    """

    kernel_sign = 1

    def __init__(self, grid, method="auto"):
        if method not in ("auto", "dense", "fft"):
            raise ValueError(f"unknown method {method!r}")
        self.grid = grid
        if method == "auto":
            method = "fft" if grid.n_points >= FFT_THRESHOLD else "dense"
        self.method = method

    def __repr__(self):
        return f"FourierOperator({self.grid!r}, method={self.method!r})"

    @cached_property
    def matrix(self):
        g = self.grid
        n = g.n_points
        if g.is_self_dual:
            # t_j t_k = pi m / (2N) with integer m; reduce m mod 4N exactly
            a = 2 * np.arange(n, dtype=np.int64) - (n - 1)
            m = np.mod(np.outer(a, a), 4 * n)
            phase = np.exp(0.5j * np.pi * np.arange(4 * n) / n)
            return phase[m] / np.sqrt(n)
        return g.step / np.sqrt(2 * np.pi) * np.exp(1j * np.outer(g.t, g.t))

    @cached_property
    def _chirp(self):
        g = self.grid
        n = g.n_points
        c = 0.5 * (n - 1)
        d2 = g.step**2
        j = np.arange(n)
        pre = np.exp(-1j * d2 * c * j)
        post = g.step / np.sqrt(2 * np.pi) * np.exp(1j * d2 * (c * c - c * j))
        return np.exp(1j * d2), pre, post

    def _apply_once(self, values):
        if self.method == "dense":
            return self.matrix @ values
        w, pre, post = self._chirp
        return post * czt(pre * values, m=self.grid.n_points, w=w, a=1.0)

    def apply(self, x, power=1):
        if x.grid != self.grid:
            raise GridMismatch(f"{x.grid} vs {self.grid}")
        if power < 0:
            raise ValueError("only non-negative powers are supported")
        v = x.values
        for _ in range(power):
            v = self._apply_once(v)
        return GridFunction(self.grid, v)

    __call__ = apply


@lru_cache(maxsize=8)
def fourier_operator(grid, method="auto"):
    return FourierOperator(grid, method)


def apply_fourier(x, power=1, method="auto"):
    """``F^power x`` on the grid of ``x``."""
    return fourier_operator(x.grid, method).apply(x, power)


def commutation_check(x, method="auto"):
    """``||F(Lx) - L(Fx)|| / ||Lx||`` with ``L`` the Hermite operator."""
    op = fourier_operator(x.grid, method)
    lx = apply_hermite_operator(x)
    diff = op.apply(lx) - apply_hermite_operator(op.apply(x))
    return diff.norm() / lx.norm()


# ---------------------------------------------------------------------------
# cosine / sine transforms on a logarithmic half-line grid
#
# x(s) is replaced by a cubic spline in s through the log-grid samples and
# each panel is integrated against cos/sin(ts) exactly. Near s = 0, where
# t*s < _TAYLOR_EPS for the whole panel, a Taylor expansion of the kernel
# reduces the work to prefix sums of polynomial moments.

_GL_X, _GL_W = np.polynomial.legendre.leggauss(8)
_GL_X = 0.5 * (_GL_X + 1)
_GL_W = 0.5 * _GL_W
_THETA_SWITCH = 2.0
_TAYLOR_EPS = 1e-3
_TAYLOR_TERMS = 6


def _panel_moments(theta):
    """``m_k(theta) = int_0^1 tau^k exp(i theta tau) dtau`` for k = 0..3."""
    m = np.empty((4,) + theta.shape, dtype=complex)
    small = theta < _THETA_SWITCH
    if np.any(small):
        e = np.exp(1j * np.multiply.outer(theta[small], _GL_X))
        for k in range(4):
            m[k][small] = e @ (_GL_W * _GL_X**k)
    big = ~small
    if np.any(big):
        tb = theta[big]
        e = np.exp(1j * tb)
        mk = (e - 1) / (1j * tb)
        m[0][big] = mk
        for k in range(1, 4):
            # upward recurrence is stable for theta >= k
            mk = (e - k * mk) / (1j * tb)
            m[k][big] = mk
    return m


class _SplinePanels:
    def __init__(self, s, x):
        spline = CubicSpline(s, x)
        h = np.diff(s)
        c = spline.c
        # coefficients in tau = (s - s_j)/h_j, lowest power first
        self.coef = np.stack([c[3], c[2] * h, c[1] * h**2, c[0] * h**3])
        self.a = s[:-1]
        self.h = h
        self.x0 = x[0]
        self.s0 = s[0]
        nz = np.flatnonzero(x)
        # spline ringing past the last nonzero sample dies out within ~30 knots
        self.end = min(h.size, (nz[-1] + 40) if nz.size else 0)
        # prefix sums of int_panel p(s) s^n ds, n = 0.._TAYLOR_TERMS-1
        sq = self.a[:, None] + self.h[:, None] * _GL_X[None, :]
        pv = sum(self.coef[k][:, None] * _GL_X[None, :] ** k for k in range(4))
        mom = np.empty((_TAYLOR_TERMS, h.size), dtype=complex)
        for n in range(_TAYLOR_TERMS):
            mom[n] = self.h * ((pv * sq**n) @ _GL_W)
        self.prefix = np.concatenate(
            [np.zeros((_TAYLOR_TERMS, 1), dtype=complex), np.cumsum(mom, axis=1)], axis=1
        )

    def transform(self, targets, kind, chunk=128):
        out = np.empty(targets.size, dtype=complex)
        s_right = self.a + self.h
        for i0 in range(0, targets.size, chunk):
            t = targets[i0 : i0 + chunk]
            # panels [0, J) are handled by the Taylor prefix sums
            J = np.searchsorted(s_right, _TAYLOR_EPS / t, side="right")
            J = np.minimum(J, self.end)
            val = np.zeros(t.size, dtype=complex)
            for n in range(_TAYLOR_TERMS):
                if kind == "cos" and n % 2 == 0 or kind == "sin" and n % 2 == 1:
                    sign = (-1) ** (n // 2)
                else:
                    continue
                fact = np.prod(np.arange(1, n + 1, dtype=float))
                val += sign * t**n / fact * self.prefix[n][J]
            lo = int(J.min())
            if lo < self.end:
                sl = slice(lo, self.end)
                th = np.outer(t, self.h[sl])
                m = _panel_moments(th)
                ph = np.exp(1j * np.outer(t, self.a[sl])) * self.h[sl]
                mask = np.arange(lo, self.end)[None, :] >= J[:, None]
                for k in range(4):
                    r = ph * m[k]
                    r = r.real if kind == "cos" else r.imag
                    val += np.where(mask, r, 0.0) @ self.coef[k][sl]
            if kind == "cos":
                val += self.x0 * np.sin(t * self.s0) / t
            else:
                val += self.x0 * (1 - np.cos(t * self.s0)) / t
            out[i0 : i0 + chunk] = val
        return np.sqrt(2 / np.pi) * out


def _half_line_transform(f, kind, target=None):
    target = f.log_grid if target is None else target
    panels = _SplinePanels(np.asarray(f.t), np.asarray(f.values))
    vals = panels.transform(np.asarray(target.t), kind)
    return HalfLineFunction(target.log_min, target.log_step, vals)


def cosine_transform(f, target=None):
    """``sqrt(2/pi) int_0^inf x(s) cos(ts) ds`` sampled on ``target`` (default: same grid)."""
    return _half_line_transform(f, "cos", target)


def sine_transform(f, target=None):
    """``sqrt(2/pi) int_0^inf x(s) sin(ts) ds`` sampled on ``target`` (default: same grid)."""
    return _half_line_transform(f, "sin", target)
