"""Fourier eigenfunctions parametrised by a free function on the critical line.

For an eigenvalue ``lam`` with Gamma shift ``g`` (1/4 for +-1, 3/4 for +-i)
an eigenfunction restricted to ``t > 0`` has Mellin transform

    phi(1/2 + i eta) = psi(i eta) * 2**(i eta / 2) * Gamma(g + i eta / 2),

with ``psi`` even for ``lam`` in {1, i} and odd for ``lam`` in {-1, -i}.
Synthesis runs this forward (psi -> phi -> inverse Mellin evaluated at the
positive grid points -> parity extension); analysis runs it backwards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotEigenfunctionError, ParityError, TailError, WeightError
from .fourier import fourier_operator
from .grid import (
    CriticalLineFunction,
    GridFunction,
    GridSpec,
    half_line_norm2,
    restrict_to_half_line,
)
from .mellin import (
    DEFAULT_LOG_MIN,
    default_log_grid,
    mellin_forward,
    mellin_inverse,
    mellin_inverse_at,
)
from .special import log_gamma

PARITY_TOL = 1e-8
ANALYZE_PARITY_TOL = 1e-6
EIGEN_TOL = 1e-4
# analysis keeps eta where |Gamma(g + i eta/2)| >= STABLE_RATIO * Gamma(g)
STABLE_RATIO = 1e-8
_LOG_UNDERFLOW = -745.0


def log_gamma_kernel(eta, shift):
    """``log(2**(i eta/2) Gamma(shift + i eta/2))``."""
    eta = np.asarray(eta, dtype=float)
    return 0.5j * eta * np.log(2.0) + log_gamma(shift + 0.5j * eta)


def gamma_kernel(eta, shift):
    lk = log_gamma_kernel(eta, shift)
    out = np.zeros(lk.shape, dtype=complex)
    ok = lk.real > _LOG_UNDERFLOW
    out[ok] = np.exp(lk[ok])
    return out


def parity_defect(values, parity):
    """``||psi(eta) -+ psi(-eta)|| / ||psi||`` on a symmetric grid."""
    v = np.asarray(values)
    sign = 1 if parity == "even" else -1
    scale = np.linalg.norm(v)
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(v - sign * v[::-1]) / scale)


@dataclass(frozen=True, eq=False)
class PsiFunction:
    """Samples of ``psi(i eta)`` on a critical-line grid with a declared parity.

    ``stable_eta`` and ``truncated`` are set by analysis when samples beyond
    the numerically stable window were zeroed.
    """

    critical: CriticalLineFunction
    parity: str
    stable_eta: float | None = None
    truncated: bool = False
    parity_tol: float = PARITY_TOL

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if not np.all(np.isfinite(self.critical.values)):
            raise WeightError("psi has non-finite samples")
        d = parity_defect(self.critical.values, self.parity)
        if d > self.parity_tol:
            raise ParityError(f"psi is not {self.parity} (defect {d:.2e})")

    @property
    def eta(self):
        return self.critical.eta

    @property
    def values(self):
        return self.critical.values

    @classmethod
    def sample(cls, func, parity, log_grid=None):
        """Sample ``func(eta)`` on the critical-line grid dual to ``log_grid``."""
        log_grid = default_log_grid() if log_grid is None else log_grid
        crit = CriticalLineFunction(log_grid.eta_max, func(log_grid.eta))
        return cls(crit, parity)

    def weighted_norm2(self, shift):
        """``int |psi(i eta)|^2 |Gamma(shift + i eta/2)|^2 d eta`` (trapezoid)."""
        lk = log_gamma_kernel(self.eta, shift).real
        w = np.where(lk > _LOG_UNDERFLOW / 2, np.exp(2 * lk), 0.0)
        with np.errstate(over="ignore"):
            return float(np.sum(self.critical.weights * np.abs(self.values) ** 2 * w))


def phi_from_psi(psi, label):
    if psi.parity != label.psi_parity:
        raise ParityError(
            f"eigenvalue {label} needs an {label.psi_parity} psi, got {psi.parity}"
        )
    weighted = psi.weighted_norm2(label.gamma_shift)
    if not np.isfinite(weighted):
        raise WeightError("weighted norm of psi diverges")
    phi = psi.values * gamma_kernel(psi.eta, label.gamma_shift)
    return psi.critical.with_values(phi)


def synthesize_half_line(psi, label, log_min=DEFAULT_LOG_MIN):
    phi = phi_from_psi(psi, label)
    try:
        return mellin_inverse(phi, log_min)
    except TailError as exc:
        raise WeightError(
            f"weighted psi has not decayed at the ends of the eta grid ({exc.tail_mass:.2e})"
        ) from exc


def synthesize_eigenfunction(psi, label, grid=None, log_min=DEFAULT_LOG_MIN):
    """Build the eigenfunction of ``F`` with eigenvalue ``label`` from ``psi``.

    Parameters
    ----------
    psi : PsiFunction
        Free parameter on the critical-line grid. Its parity must match
        ``label.psi_parity``.
    label : EigenLabel
    grid : GridSpec, optional
        Target line grid; defaults to the self-dual 1024-point grid.

    Raises
    ------
    ParityError
        If the parity of ``psi`` does not match the eigenvalue.
    WeightError
        If ``psi * Gamma`` is not square integrable on the truncated grid.
    """
    grid = GridSpec.self_dual() if grid is None else grid
    phi = phi_from_psi(psi, label)
    t = grid.t
    pos = t > 0
    try:
        half = mellin_inverse_at(phi, t[pos])
    except TailError as exc:
        raise WeightError(
            f"weighted psi has not decayed at the ends of the eta grid ({exc.tail_mass:.2e})"
        ) from exc
    vals = np.zeros(grid.n_points, dtype=complex)
    vals[pos] = half
    # grids have an even point count, so t_j = -t_{N-1-j} and t = 0 is never sampled
    sign = 1.0 if label.parity == "even" else -1.0
    vals[~pos] = sign * half[::-1]
    return GridFunction(grid, vals)


def eigen_residual(x, label):
    op = fourier_operator(x.grid)
    return (op.apply(x) - label.eigenvalue * x).norm() / x.norm()


def analyze_eigenfunction(x, label, log_grid=None, check=True):
    """Recover ``psi`` from an (approximate) eigenfunction ``x``.

    Samples where ``|Gamma(g + i eta/2)| < 1e-8 Gamma(g)`` are zeroed and the
    result is flagged as truncated; ``stable_eta`` records the window edge.
    """
    if check:
        res = eigen_residual(x, label)
        if res > EIGEN_TOL:
            raise NotEigenfunctionError(
                f"input is not an eigenfunction for {label} (residual {res:.2e})", res
            )
    log_grid = default_log_grid() if log_grid is None else log_grid
    phi = mellin_forward(restrict_to_half_line(x, log_grid))
    lk = log_gamma_kernel(phi.eta, label.gamma_shift)
    floor = np.log(STABLE_RATIO) + float(log_gamma(label.gamma_shift).real)
    stable = lk.real >= floor
    psi = np.zeros(phi.n_points, dtype=complex)
    psi[stable] = phi.values[stable] * np.exp(-lk[stable])
    stable_eta = float(np.max(np.abs(phi.eta[stable])))
    return PsiFunction(
        phi.with_values(psi),
        label.psi_parity,
        stable_eta=stable_eta,
        truncated=bool(not np.all(stable)),
        parity_tol=ANALYZE_PARITY_TOL,
    )


@dataclass(frozen=True)
class ParsevalReport:
    ratio: float
    half_line_norm2: float
    weighted_psi_norm2: float
    gamma_shift: float


def parseval_psi_check(x, psi, label):
    """Ratio of ``int_0^inf |x|^2`` to ``int |psi|^2 |Gamma(g + i eta/2)|^2 d eta``.

    The Mellin Parseval identity predicts ``1 / (2 pi)`` for both shifts.
    """
    lhs = half_line_norm2(x)
    rhs = psi.weighted_norm2(label.gamma_shift)
    return ParsevalReport(lhs / rhs, lhs, rhs, label.gamma_shift)
