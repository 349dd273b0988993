"""Closed-form moments and squeezing values for the SCS and the evolved SCS.

These functions never touch an operator matrix; they are the independent
side of every matrix-vs-formula cross-check.  Sums over n are accumulated
with ``math.fsum`` (real and imaginary parts separately) because the terms
span many orders of magnitude when |eta| is far from 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._numeric import binomial_weights, falling_factorial, phase_factors
from .errors import ArgumentError, UndefinedSqueezingError


@dataclass(frozen=True)
class MomentSet:
    mean_n: float
    mean_n2: float
    var_n: float


def _check_two_j(two_j):
    if int(two_j) != two_j or two_j < 0:
        raise ArgumentError(f"two_j must be a nonnegative integer, got {two_j!r}")
    return int(two_j)


def _check_k(k):
    if int(k) != k or k < 0:
        raise ArgumentError(f"k must be a nonnegative integer, got {k!r}")
    return int(k)


def _csum(terms):
    terms = np.asarray(terms, dtype=complex)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def generating_function(two_j, eta, lam):
    """G(lambda) = <lambda^N> = (1 + lambda |eta|^2)^(2j) / (1 + |eta|^2)^(2j)."""
    two_j = _check_two_j(two_j)
    r = abs(complex(eta)) ** 2
    base = 1.0 + lam * r
    if base < 0.0:
        raise ArgumentError(f"1 + lambda |eta|^2 = {base!r} is negative")
    return (base / (1.0 + r)) ** two_j


def factorial_moment(two_j, eta, k):
    """<N (N-1) ... (N-k+1)> = |eta|^(2k) (2j)! / ((1+|eta|^2)^k (2j-k)!).

    Zero for k > 2j.
    """
    two_j = _check_two_j(two_j)
    k = _check_k(k)
    if k > two_j:
        return 0.0
    r = abs(complex(eta)) ** 2
    return (r / (1.0 + r)) ** k * falling_factorial(two_j, k)


def scs_number_moments(two_j, eta):
    """<N>, <N^2> and (Delta N)^2 for the SCS."""
    two_j = _check_two_j(two_j)
    r = abs(complex(eta)) ** 2
    d = 1.0 + r
    mean_n = two_j * r / d
    mean_n2 = (two_j * r + two_j**2 * r * r) / d**2
    var_n = two_j * r / d**2
    return MomentSet(mean_n, mean_n2, var_n)


def scs_jminus_k(two_j, eta, k):
    """<J-^k> = eta^k (2j)! / ((1+|eta|^2)^k (2j-k)!) for the SCS; zero for k > 2j."""
    two_j = _check_two_j(two_j)
    k = _check_k(k)
    if k > two_j:
        return 0j
    eta = complex(eta)
    return eta**k / (1.0 + abs(eta) ** 2) ** k * falling_factorial(two_j, k)


def scs_spin_means(two_j, eta):
    """(<Jx>, <Jy>, <Jz>) for the SCS.

    <Jy> = j (eta* - eta) / (i (1 + |eta|^2)) = -2j Im(eta) / (1 + |eta|^2);
    the sign agrees with Jy = (J+ - J-)/(2i) on the matrix side.
    """
    two_j = _check_two_j(two_j)
    eta = complex(eta)
    j = two_j / 2
    d = 1.0 + abs(eta) ** 2
    jx = j * (eta + eta.conjugate()).real / d
    jy = (j * (eta.conjugate() - eta) / (1j * d)).real
    jz = j * (abs(eta) ** 2 - 1.0) / d
    return np.array([jx, jy, jz])


def scs_variances_xy(two_j, eta):
    """((Delta Jx)^2, (Delta Jy)^2) for the SCS."""
    two_j = _check_two_j(two_j)
    eta = complex(eta)
    j = two_j / 2
    r = abs(eta) ** 2
    re_sq = 2.0 * (eta * eta).real  # eta^2 + eta*^2
    d = 2.0 * (1.0 + r) ** 2
    return j * (1.0 + r * r - re_sq) / d, j * (1.0 + r * r + re_sq) / d


def _phase_sum(m, eta, F, t, k):
    # sum_n C(m, n) p^n (1-p)^(m-n) exp(i t [F(n) - F(n+k)]),  m = 2j - k
    w = binomial_weights(m, abs(complex(eta)) ** 2)
    values = F.values(m, extra=k)
    # exp(i t [F(n) - F(n+k)]) = conj(exp(-i t F(n))) * exp(-i t F(n+k)), both exactly reduced
    ph = phase_factors(t, values)
    return _csum(w * ph[:m + 1].conj() * ph[k:])


def nlscs_jminus_k(two_j, eta, F, t, k):
    """<J-^k> on exp(-i t F(N)) |eta>.

    eta^k (1+|eta|^2)^(-2j) (2j)!/(2j-k)! sum_{n=0}^{2j-k} C(2j-k, n) |eta|^(2n)
    exp(i t [F(n) - F(n+k)]), evaluated with the (1+|eta|^2)^(-(2j-k)) factor
    folded into binomial weights.  Reduces to :func:`scs_jminus_k` at t = 0.
    """
    two_j = _check_two_j(two_j)
    k = _check_k(k)
    if k > two_j:
        return 0j
    eta = complex(eta)
    prefactor = eta**k / (1.0 + abs(eta) ** 2) ** k * falling_factorial(two_j, k)
    return prefactor * _phase_sum(two_j - k, eta, F, t, k)


def nlscs_xi_z(two_j, eta, F, t):
    """z-axis squeezing parameter of the evolved SCS in closed form.

    xi_z^2 = 1 / |(1+|eta|^2)^(1-2j) sum_{n=0}^{2j-1} C(2j-1, n) |eta|^(2n)
    exp(i t [F(n) - F(n+1)])|^2, which is >= 1 since the weights sum to one.

    Raises
    ------
    UndefinedSqueezingError
        For eta = 0, where <J-> vanishes.
    """
    two_j = _check_two_j(two_j)
    if two_j < 1:
        raise ArgumentError("xi_z^2 needs two_j >= 1")
    if complex(eta) == 0:
        raise UndefinedSqueezingError("undefined squeezing direction: eta = 0 gives <J-> = 0")
    s = _phase_sum(two_j - 1, eta, F, t, 1)
    return 1.0 / abs(s) ** 2
