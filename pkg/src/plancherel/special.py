"""Complex log-Gamma and the Gamma identities used by the Mellin machinery."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PoleError

POLE_TOL = 1e-12
LOG_PI = float(np.log(np.pi))
HALF_LOG_2PI = float(0.5 * np.log(2 * np.pi))

# B_{2k} / (2k (2k-1)) for k = 1..10
_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330),
]
_STIRLING = tuple(float(b / ((2 * k) * (2 * k - 1))) for k, b in enumerate(_BERNOULLI, 1))
# |z| at which the truncated Stirling series is below 1e-19
_STIRLING_MIN = 15.0


@dataclass(frozen=True)
class GammaEval:
    argument: complex
    log_gamma: complex

    @property
    def value(self):
        return complex(np.exp(self.log_gamma))


def _stirling(z):
    w = 1.0 / (z * z)
    s = np.zeros_like(z)
    for c in reversed(_STIRLING):
        s = s * w + c
    return (z - 0.5) * np.log(z) - z + HALF_LOG_2PI + s / z


def _log_gamma_right(z):
    """ln Gamma for Re z >= 1/2 (shift up, then Stirling)."""
    n = np.maximum(0, np.ceil(_STIRLING_MIN - z.real)).astype(int)
    acc = np.zeros_like(z)
    for k in range(int(n.max(initial=0))):
        m = k < n
        acc[m] += np.log(z[m] + k)
    return _stirling(z + n) - acc


def _log_sin_pi(z):
    """Principal log of sin(pi z), safe for large |Im z|."""
    x = z.real - 2.0 * np.round(0.5 * z.real)
    y = z.imag
    zr = x + 1j * y
    out = np.empty_like(zr)
    small = np.abs(y) <= 20.0
    out[small] = np.log(np.sin(np.pi * zr[small]))
    big = ~small
    if np.any(big):
        # work in the upper half plane and conjugate back
        sgn = np.sign(y[big])
        w = x[big] + 1j * np.abs(y[big])
        val = -1j * np.pi * w + np.log1p(-np.exp(2j * np.pi * w)) + np.log(0.5j)
        im = np.mod(val.imag + np.pi, 2 * np.pi) - np.pi
        val = val.real + 1j * im
        out[big] = np.where(sgn > 0, val, np.conj(val))
    return out


def _check_poles(z):
    near = (z.real <= 0.5) & (np.abs(z.imag) < POLE_TOL)
    if np.any(near):
        k = np.round(z.real[near])
        hit = np.abs(z.real[near] - k) < POLE_TOL
        if np.any(hit):
            idx = int(-k[hit][0])
            raise PoleError(f"argument within {POLE_TOL} of the pole at {-idx}", idx)


def log_gamma(zeta):
    """Principal branch of ln Gamma(zeta).

    The branch is the analytic continuation of the real ``lgamma`` from the
    positive axis, cut along the negative real axis, so that
    ``log_gamma(conj(z)) == conj(log_gamma(z))``.

    Parameters
    ----------
    zeta : complex or array_like of complex

    Returns
    -------
    complex or numpy.ndarray
        Same shape as the input.

    Raises
    ------
    PoleError
        If any argument lies within 1e-12 of 0, -1, -2, ...
    """
    scalar = np.ndim(zeta) == 0
    z = np.atleast_1d(np.asarray(zeta, dtype=complex)).ravel()
    _check_poles(z)
    # evaluate in the closed upper half plane; this also settles the sign of -0j on the cut
    lower = np.signbit(z.imag)
    z = np.where(lower, np.conj(z), z)
    out = np.empty_like(z)
    right = z.real >= 0.5
    if np.any(right):
        out[right] = _log_gamma_right(z[right])
    left = ~right
    if np.any(left):
        zl = z[left]
        val = LOG_PI - _log_sin_pi(zl) - _log_gamma_right(1.0 - zl)
        # unwind the 2*pi*i ambiguity of the principal log sin
        k = np.floor(0.5 * zl.real + 0.25)
        out[left] = val + 1j * np.copysign(2 * np.pi, zl.imag) * k
    out = np.where(lower, np.conj(out), out)
    if scalar:
        return complex(out[0])
    return out.reshape(np.shape(zeta))


def gamma(zeta):
    return np.exp(log_gamma(zeta))


def evaluate(zeta):
    return GammaEval(complex(zeta), log_gamma(zeta))


def _rel(lhs, rhs):
    return float(np.max(np.abs(lhs - rhs) / np.maximum(np.abs(lhs), np.abs(rhs))))


def check_gamma_identities(zetas):
    """Maximum relative residual of each classical Gamma identity.

    Both sides are evaluated from :func:`log_gamma` and compared pointwise.
    Keys: ``recurrence``, ``reflection``, ``duplication``, ``cosine``, ``sine``.
    """
    z = np.atleast_1d(np.asarray(zetas, dtype=complex))
    G = gamma
    sq2pi = np.sqrt(2 / np.pi)
    return {
        "recurrence": _rel(G(z + 1), z * G(z)),
        "reflection": _rel(G(z) * G(1 - z), np.pi / np.sin(np.pi * z)),
        "duplication": _rel(
            G(z) * G(z + 0.5), 2 * np.sqrt(np.pi) * 2.0 ** (-2 * z) * G(2 * z)
        ),
        "cosine": _rel(
            sq2pi * np.cos(np.pi * z / 2) * G(z), 2.0 ** (z - 0.5) * G(z / 2) / G(0.5 - z / 2)
        ),
        "sine": _rel(
            sq2pi * np.sin(np.pi * z / 2) * G(z), 2.0 ** (z - 0.5) * G(0.5 + z / 2) / G(1 - z / 2)
        ),
    }


def cos_sin_moment(zeta, kind):
    """Closed form of the improper integral of cos(s) (or sin(s)) * s**(zeta-1).

    Valid in the strip ``0 < Re zeta < 1`` where the integral converges
    conditionally; returns ``cos(pi zeta/2) Gamma(zeta)`` or the sine analogue.
    """
    z = np.asarray(zeta, dtype=complex)
    if np.any((z.real <= 0) | (z.real >= 1)):
        raise DomainError("moment integrals need 0 < Re(zeta) < 1")
    if kind == "cos":
        trig = np.cos(np.pi * z / 2)
    elif kind == "sin":
        trig = np.sin(np.pi * z / 2)
    else:
        raise ValueError(f"kind must be 'cos' or 'sin', got {kind!r}")
    out = trig * gamma(z)
    return complex(out) if out.ndim == 0 else out


def functional_kernel(zeta, kind):
    """Multiplier linking the Mellin transforms of x and its cos/sin transform.

    ``2**(zeta-1/2) Gamma(zeta/2) / Gamma(1/2 - zeta/2)`` for ``kind='cos'`` and
    ``2**(zeta-1/2) Gamma(1/2 + zeta/2) / Gamma(1 - zeta/2)`` for ``kind='sin'``,
    evaluated in log space.
    """
    z = np.asarray(zeta, dtype=complex)
    if kind == "cos":
        lg = log_gamma(z / 2) - log_gamma(0.5 - z / 2)
    elif kind == "sin":
        lg = log_gamma(0.5 + z / 2) - log_gamma(1 - z / 2)
    else:
        raise ValueError(f"kind must be 'cos' or 'sin', got {kind!r}")
    return np.exp((z - 0.5) * np.log(2.0) + lg)
