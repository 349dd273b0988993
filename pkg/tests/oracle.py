"""Brute-force high-precision reference values computed straight from the state definition.

Independent of both library routes: no operator matrices, no closed forms,
no shared phase helper.  mpmath at 50 digits.
"""

import mpmath

mpmath.mp.dps = 50


def amplitudes(two_j, eta, F=None, t=0.0):
    """c_n = (1+|eta|^2)^(-j) sqrt(C(2j,n)) eta^n exp(-i t F(n)), n = 0..2j."""
    eta = mpmath.mpc(eta)
    norm = (1 + abs(eta) ** 2) ** (-mpmath.mpf(two_j) / 2)
    out = []
    for n in range(two_j + 1):
        c = norm * mpmath.sqrt(mpmath.binomial(two_j, n)) * eta**n
        if F is not None:
            c *= mpmath.expj(-mpmath.mpf(t) * mpmath.mpf(F(n)))
        out.append(c)
    return out


def jminus_k(two_j, c, k):
    """<J-^k> = sum_n conj(c_{n-k}) c_n prod_{i<k} sqrt((n-i)(2j-n+i+1))."""
    total = mpmath.mpc(0)
    for n in range(k, two_j + 1):
        m = mpmath.mpf(1)
        for i in range(k):
            m *= mpmath.sqrt((n - i) * (two_j - n + i + 1))
        total += mpmath.conj(c[n - k]) * c[n] * m
    return complex(total)


def number_moment(c, power):
    return float(sum(abs(x) ** 2 * mpmath.mpf(n) ** power for n, x in enumerate(c)))
