"""Projectors onto the four eigenspaces of the Fourier operator."""

from __future__ import annotations

import enum

import numpy as np

from .fourier import fourier_operator
from .hermite import CoefficientVector

# i**k for k mod 4, exact
_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


class EigenLabel(enum.Enum):
    """Fourier eigenvalue ``i**power``.

    Eigenfunctions are even for 1 and -1 and odd for i and -i. The Mellin
    parametrisation uses the Gamma shift 1/4 for the even ones and 3/4 for
    the odd ones.
    """

    ONE = 0
    I = 1
    MINUS_ONE = 2
    MINUS_I = 3

    @property
    def power(self):
        return self.value

    @property
    def eigenvalue(self):
        return _I_POW[self.value]

    @property
    def parity(self):
        return "even" if self.value % 2 == 0 else "odd"

    @property
    def gamma_shift(self):
        return 0.25 if self.value % 2 == 0 else 0.75

    @property
    def psi_parity(self):
        """Parity of the free parameter: even for 1 and i, odd for -1 and -i."""
        return "even" if self.value in (0, 1) else "odd"

    def __str__(self):
        return ("1", "i", "-1", "-i")[self.value]

    @classmethod
    def parse(cls, text):
        table = {"1": cls.ONE, "i": cls.I, "-1": cls.MINUS_ONE, "-i": cls.MINUS_I,
                 "+1": cls.ONE, "+i": cls.I, "j": cls.I, "-j": cls.MINUS_I}
        key = str(text).strip().lower()
        if key not in table:
            raise ValueError(f"eigenvalue must be one of 1, i, -1, -i; got {text!r}")
        return table[key]

    @classmethod
    def of_index(cls, n):
        """Label of the Hermite function ``e_n``."""
        return cls(n % 4)


def project(x, label, method="auto"):
    """``P x = (1/4) sum_{k=0}^{3} label**(-k) F^k x``."""
    op = fourier_operator(x.grid, method)
    acc = x.values.astype(complex)
    v = x.values
    for k in range(1, 4):
        v = op.apply(x.with_values(v)).values
        acc = acc + _I_POW[(-label.power * k) % 4] * v
    return x.with_values(0.25 * acc)


def decompose(x, method="auto"):
    """Components ``(P_1 x, P_i x, P_-1 x, P_-i x)``, sharing the Fourier powers."""
    op = fourier_operator(x.grid, method)
    powers = [x.values]
    for _ in range(3):
        powers.append(op.apply(x.with_values(powers[-1])).values)
    out = []
    for label in EigenLabel:
        acc = sum(_I_POW[(-label.power * k) % 4] * powers[k] for k in range(4))
        out.append(x.with_values(0.25 * acc))
    return tuple(out)


def coefficient_filter(c, label):
    """Zero every ``c_n`` whose Hermite function does not belong to ``label``."""
    coeffs = c.coeffs if isinstance(c, CoefficientVector) else np.asarray(c, dtype=complex)
    keep = (np.arange(coeffs.size) % 4) == label.power
    return CoefficientVector(np.where(keep, coeffs, 0.0))
