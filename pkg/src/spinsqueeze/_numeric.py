"""Numerical helpers: stable binomial weights and accurately reduced phases."""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

# exact integer binomials up to this 2j, log-gamma above
EXACT_BINOMIAL_LIMIT = 60

# 2*pi to 60 digits; products t*F(n) are reduced against this exactly
_TWO_PI = Fraction("6.28318530717958647692528676655900576839433879875021164194988918")
# below this magnitude, the rounding of t*v itself is < 1e-14 and needs no reduction
_DIRECT_LIMIT = 64.0


def log_binomial(m, n):
    """Natural log of C(m, n), elementwise over ``n``."""
    n = np.asarray(n, dtype=float)
    return math.lgamma(m + 1) - _lgamma(n + 1) - _lgamma(m - n + 1)


_lgamma = np.vectorize(math.lgamma, otypes=[float])


def sqrt_binomials(m):
    """Array of sqrt(C(m, n)) for n = 0..m."""
    if m <= EXACT_BINOMIAL_LIMIT:
        return np.sqrt(np.array([float(math.comb(m, n)) for n in range(m + 1)]))
    return np.exp(0.5 * log_binomial(m, np.arange(m + 1)))


def binomial_weights(m, modulus_sq):
    """Binomial distribution C(m, n) p^n (1-p)^(m-n) with p = r/(1+r), r = |eta|^2.

    Evaluated in the log domain so that neither small nor large ``modulus_sq``
    overflows; an exact unit vector is returned for ``modulus_sq == 0``.
    """
    if modulus_sq == 0.0:
        w = np.zeros(m + 1)
        w[0] = 1.0
        return w
    n = np.arange(m + 1)
    log_q = -math.log1p(modulus_sq)
    log_p = math.log(modulus_sq) + log_q
    if m <= EXACT_BINOMIAL_LIMIT:
        lb = np.log(np.array([float(math.comb(m, k)) for k in range(m + 1)]))
    else:
        lb = log_binomial(m, n)
    return np.exp(lb + n * log_p + (m - n) * log_q)


def falling_factorial(m, k):
    """m! / (m-k)! as a float; zero when k > m."""
    if k > m:
        return 0.0
    if m <= EXACT_BINOMIAL_LIMIT:
        return float(math.perm(m, k))
    return math.exp(math.lgamma(m + 1) - math.lgamma(m - k + 1))


def reduced_angle(t, v):
    """t*v reduced into [-pi, pi], computed from the exact product of the two floats."""
    x = t * v
    if abs(x) < _DIRECT_LIMIT:
        return x
    exact = Fraction(t) * Fraction(v)
    q = round(exact / _TWO_PI)
    return float(exact - q * _TWO_PI)


@lru_cache(maxsize=8192)
def _phase_tuple(t, values):
    return tuple(reduced_angle(t, v) for v in values)


def phase_factors(t, values):
    """exp(-1j * t * values) with exact argument reduction.

    Large phases such as t*N^4 lose ~1e-10 absolute accuracy when the product
    is rounded before the exponential; reducing the exact product modulo 2*pi
    keeps every factor accurate to a few ulp.
    """
    angles = np.array(_phase_tuple(float(t), tuple(float(v) for v in values)))
    return np.exp(-1j * angles)
