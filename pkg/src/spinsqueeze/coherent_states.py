"""Spin coherent states and their nonlinear (phase-evolved) counterparts.

The SCS in the number basis has amplitudes

    c_n = (1 + |eta|^2)^(-j) * sqrt(C(2j, n)) * eta^n,

and evolving it under a diagonal Hamiltonian F(N) multiplies each c_n by
exp(-i t F(n)).  The evolved state satisfies the generalized ladder equation
f(N) J- psi = eta (2j - N) psi with f(n) = exp(i t [F(n+1) - F(n)]).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import spin_algebra as sa
from ._numeric import EXACT_BINOMIAL_LIMIT, log_binomial, phase_factors, reduced_angle
from .errors import ArgumentError
from .fnl import NonlinearFunction, parse


@dataclass(frozen=True)
class CoherentParams:
    """SCS parameter eta on a given space."""

    eta: complex
    space: sa.SpinSpace

    def __post_init__(self):
        eta = complex(self.eta)
        if not cmath.isfinite(eta):
            raise ArgumentError(f"eta must be finite, got {self.eta!r}")
        object.__setattr__(self, "eta", eta)


@dataclass(frozen=True)
class EvolvedParams:
    """An SCS evolved for time ``t`` under F(N) (hbar = 1)."""

    base: CoherentParams
    f_nl: NonlinearFunction
    t: float

    def __post_init__(self):
        if isinstance(self.f_nl, str):
            object.__setattr__(self, "f_nl", parse(self.f_nl))
        t = float(self.t)
        if not math.isfinite(t):
            raise ArgumentError(f"t must be finite, got {self.t!r}")
        object.__setattr__(self, "t", t)


def _log_sqrt_binomials(two_j):
    n = np.arange(two_j + 1)
    if two_j <= EXACT_BINOMIAL_LIMIT:
        return 0.5 * np.log(np.array([float(math.comb(two_j, k)) for k in n]))
    return 0.5 * log_binomial(two_j, n)


def scs_amplitudes(two_j, eta):
    """Normalized SCS amplitudes for n = 0..2j.

    Moduli are built in the log domain, shifted by the largest one before
    exponentiating, so that |eta| far from 1 neither overflows nor loses
    the dominant terms.
    """
    eta = complex(eta)
    out = np.zeros(two_j + 1, dtype=complex)
    r = abs(eta)
    if r == 0.0:
        out[0] = 1.0
        return out
    n = np.arange(two_j + 1)
    log_mod = _log_sqrt_binomials(two_j) + n * math.log(r) - 0.5 * two_j * math.log1p(r * r)
    log_mod -= log_mod.max()
    out = np.exp(log_mod) * np.exp(1j * n * cmath.phase(eta))
    return out / np.linalg.norm(out)


def scs(params):
    """Spin coherent state |eta>."""
    return sa.StateVector(params.space, scs_amplitudes(params.space.two_j, params.eta))


def nonlinear_scs(params):
    """|eta, t> = exp(-i t F(N)) |eta>.

    Raises
    ------
    EvaluationError
        If F(n) is not finite for some n in 0..2j.
    """
    space = params.base.space
    values = params.f_nl.values(space.two_j)
    amps = scs_amplitudes(space.two_j, params.base.eta) * phase_factors(params.t, values)
    return sa.StateVector(space, amps / np.linalg.norm(amps))


def effective_nonlinearity(F, t):
    """The map n -> exp(i t [F(n+1) - F(n)]) that the evolved SCS obeys."""
    t = float(t)

    def f(n):
        delta = F(n + 1) - F(n)
        return cmath.exp(1j * reduced_angle(t, delta))

    return f


def ladder_residual(psi, eta, f=None):
    """||f(N) J- psi - eta (2j - N) psi||_2.

    ``f`` maps n to a (possibly complex) number and defaults to f = 1, the
    plain SCS ladder equation.
    """
    space = psi.space
    lhs = sa.ladder_lowering(space) @ psi
    if f is not None:
        lhs = np.array([f(n) for n in range(space.dim)], dtype=complex) * lhs
    n = np.arange(space.dim)
    rhs = complex(eta) * (space.two_j - n) * psi.amplitudes
    return float(np.linalg.norm(lhs - rhs))


PARITY_HAMILTONIAN = "N^2-N"


def parity_identity_residual(params):
    """||Pi J- |eta, pi/2> - eta (2j - N) |eta, pi/2>||_2 with F = N^2 - N."""
    psi = nonlinear_scs(EvolvedParams(params, parse(PARITY_HAMILTONIAN), math.pi / 2))
    space = params.space
    lhs = sa.parity_operator(space).matrix @ (sa.ladder_lowering(space) @ psi)
    rhs = params.eta * (space.two_j - np.arange(space.dim)) * psi.amplitudes
    return float(np.linalg.norm(lhs - rhs))


def apply_evolution(psi, F, t):
    """Propagate an arbitrary state by exp(-i t F(N))."""
    values = F.values(psi.space.two_j)
    return sa.StateVector.normalized(psi.space, psi.amplitudes * phase_factors(t, values))
