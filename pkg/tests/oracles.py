"""Reference values computed by routes that share no code with the package."""

import math
import warnings

import mpmath
import numpy as np
from scipy import integrate


def gamma_quadrature(z):
    """Gamma(z) for Re z > 0 from the Euler integral, split at t = 1.

    On (0, 1] the substitution t = s^(1/a), a = Re z, removes the endpoint
    singularity: int_0^1 t^(z-1) e^-t dt = (1/a) int_0^1 s^(i b / a) e^(-s^(1/a)) ds.
    """
    a, b = z.real, z.imag

    def head(s, part):
        if s == 0:
            return 0.0
        v = np.exp(1j * (b / a) * np.log(s)) * np.exp(-(s ** (1 / a))) / a
        return getattr(v, part)

    def tail(t, part):
        v = t ** (z - 1) * math.exp(-t)
        return getattr(v, part)

    opts = {"limit": 400, "epsabs": 1e-15, "epsrel": 1e-14}
    with warnings.catch_warnings():
        # QUADPACK flags roundoff once it is at the 1e-15 level; the values are fine
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        h = complex(*(integrate.quad(head, 0, 1, args=(p,), **opts)[0] for p in ("real", "imag")))
        g = complex(*(integrate.quad(tail, 1, np.inf, args=(p,), **opts)[0] for p in ("real", "imag")))
    return h + g


def gaussian_integral():
    """int exp(-t^2) dt over the line by adaptive quadrature."""
    return integrate.quad(lambda t: math.exp(-t * t), -np.inf, np.inf, epsabs=1e-15)[0]


def cesaro_moment(z, kind, r_max=1e4):
    """int_0^inf trig(s) s^(z-1) ds from truncated quadrature plus Cesaro tail averaging.

    I(R) is the exact Taylor series of the integral over [0, 1] plus a
    QUADPACK oscillatory-weight rule on [1, R]. The partial integrals
    oscillate around the limit with period P = 2 pi; averaging I twice over
    one period equals I(R) plus int_R^(R+2P) f(s) S(s - R) ds, where S is the survival function
    of the sum of two uniform variables on [0, P].
    """
    a, b = z.real, z.imag
    trig = math.cos if kind == "cos" else math.sin
    period = 2 * math.pi

    def amp(s, part):
        ph = b * math.log(s)
        return s ** (a - 1) * (math.cos(ph) if part == "real" else math.sin(ph))

    def survive(x):
        if x <= period:
            return 1 - 0.5 * (x / period) ** 2
        return 0.5 * ((2 * period - x) / period) ** 2

    # head: integrate the Taylor series of trig term by term, int_0^1 s^(n+z-1) ds = 1/(n+z)
    offset = 0 if kind == "cos" else 1
    head = sum(
        (-1) ** k / (math.factorial(2 * k + offset) * (2 * k + offset + z)) for k in range(15)
    )
    out = []
    for part in ("real", "imag"):
        body = integrate.quad(
            amp, 1, r_max, args=(part,), weight=kind, wvar=1.0, limit=20000, epsabs=1e-14,
        )[0]
        tail = integrate.quad(
            lambda s, part=part: trig(s) * amp(s, part) * survive(s - r_max),
            r_max, r_max + 2 * period, limit=400, epsabs=1e-15,
        )[0]
        out.append(body + tail)
    return head + complex(out[0], out[1])


def mp_log_gamma(z):
    return complex(mpmath.loggamma(mpmath.mpc(z)))
