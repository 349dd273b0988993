"""Dense angular-momentum operator algebra on a single spin-j space.

States are written in the number basis |n> = |j, -j+n>, n = 0..2j, so that
the number operator N = Jz + j is diag(0, 1, ..., 2j).  Everything is stored
as small dense complex matrices; ``two_j`` is the integer parameter so that
half-integer j never goes through float rounding.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ArgumentError

HERMITIAN_ATOL = 1e-12
NORM_ATOL = 1e-12
UNIT_ATOL = 1e-12


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SpinSpace:
    """The (2j+1)-dimensional spin-j Hilbert space."""

    two_j: int

    def __post_init__(self):
        if int(self.two_j) != self.two_j or self.two_j < 0:
            raise ArgumentError(f"two_j must be a nonnegative integer, got {self.two_j!r}")
        object.__setattr__(self, "two_j", int(self.two_j))

    @property
    def dim(self):
        return self.two_j + 1

    @property
    def j(self):
        return self.two_j / 2


@dataclass(frozen=True, eq=False)
class Operator:
    """Immutable dense operator on a :class:`SpinSpace`.

    The ``hermitian`` flag is trusted by :func:`expectation` and
    :func:`variance`; it is verified at construction unless Python runs
    with ``-O``.
    """

    space: SpinSpace
    matrix: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.shape != (self.space.dim, self.space.dim):
            raise ArgumentError(f"matrix shape {m.shape} does not match dim {self.space.dim}")
        object.__setattr__(self, "matrix", m)
        if __debug__ and self.hermitian:
            err = np.max(np.abs(m - m.conj().T), initial=0.0)
            if err > HERMITIAN_ATOL:
                raise ArgumentError(f"operator flagged hermitian but |A - A^dag| = {err:.3e}")

    def dag(self):
        return Operator(self.space, self.matrix.conj().T, self.hermitian)

    def _check(self, other):
        if other.space != self.space:
            raise ArgumentError("operators act on different spaces")

    def __add__(self, other):
        self._check(other)
        return Operator(self.space, self.matrix + other.matrix, self.hermitian and other.hermitian)

    def __sub__(self, other):
        self._check(other)
        return Operator(self.space, self.matrix - other.matrix, self.hermitian and other.hermitian)

    def __neg__(self):
        return Operator(self.space, -self.matrix, self.hermitian)

    def __mul__(self, scalar):
        real = np.isreal(scalar)
        return Operator(self.space, scalar * self.matrix, self.hermitian and bool(real))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, StateVector):
            if other.space != self.space:
                raise ArgumentError("operator and state act on different spaces")
            return self.matrix @ other.amplitudes
        self._check(other)
        return Operator(self.space, self.matrix @ other.matrix)

    def __pow__(self, k):
        return Operator(self.space, np.linalg.matrix_power(self.matrix, k), self.hermitian)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state over the number basis."""

    space: SpinSpace
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = _frozen(self.amplitudes)
        if a.shape != (self.space.dim,):
            raise ArgumentError(f"expected {self.space.dim} amplitudes, got shape {a.shape}")
        norm = np.linalg.norm(a)
        if abs(norm - 1.0) > NORM_ATOL:
            raise ArgumentError(f"state is not normalized: |psi| = {norm!r}")
        object.__setattr__(self, "amplitudes", a)

    @classmethod
    def normalized(cls, space, amplitudes):
        a = np.asarray(amplitudes, dtype=complex)
        norm = np.linalg.norm(a)
        if not np.isfinite(norm) or norm == 0.0:
            raise ArgumentError("cannot normalize a zero or non-finite vector")
        return cls(space, a / norm)

    @property
    def probabilities(self):
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class Direction:
    """Unit vector (x, y, z) selecting a spin component."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))
        norm_sq = self.x**2 + self.y**2 + self.z**2
        if not abs(norm_sq - 1.0) <= UNIT_ATOL:
            raise ArgumentError(f"direction is not a unit vector: |n|^2 = {norm_sq!r}")

    @classmethod
    def from_vector(cls, v):
        """Normalize an arbitrary nonzero 3-vector."""
        v = np.asarray(v, dtype=float)
        norm = np.linalg.norm(v)
        if v.shape != (3,) or not np.isfinite(norm) or norm == 0.0:
            raise ArgumentError(f"cannot build a direction from {v!r}")
        v = v / norm
        return cls(*v)

    def as_array(self):
        return np.array([self.x, self.y, self.z])


X_AXIS = Direction(1.0, 0.0, 0.0)
Y_AXIS = Direction(0.0, 1.0, 0.0)
Z_AXIS = Direction(0.0, 0.0, 1.0)


def make_space(two_j):
    """Space of spin j = two_j / 2; raises :class:`ArgumentError` for negative input."""
    return SpinSpace(two_j)


def identity(space):
    return _identity(space.two_j)


@lru_cache(maxsize=None)
def _identity(two_j):
    space = SpinSpace(two_j)
    return Operator(space, np.eye(space.dim), hermitian=True)


def number_state(space, n):
    """Basis state |n> = |j, -j+n>."""
    if not 0 <= n <= space.two_j:
        raise ArgumentError(f"number state index {n} outside 0..{space.two_j}")
    a = np.zeros(space.dim, dtype=complex)
    a[n] = 1.0
    return StateVector(space, a)


def number_operator(space):
    """N = diag(0, 1, ..., 2j)."""
    return _number_operator(space.two_j)


@lru_cache(maxsize=None)
def _number_operator(two_j):
    space = SpinSpace(two_j)
    return Operator(space, np.diag(np.arange(space.dim, dtype=float)), hermitian=True)


def ladder_lowering(space):
    """J- with J-|n> = sqrt(n (2j - n + 1)) |n-1>."""
    return _ladder_lowering(space.two_j)


@lru_cache(maxsize=None)
def _ladder_lowering(two_j):
    space = SpinSpace(two_j)
    n = np.arange(1, space.dim)
    return Operator(space, np.diag(np.sqrt(n * (two_j - n + 1.0)), k=1))


def ladder_raising(space):
    return ladder_lowering(space).dag()


def cartesian_components(space):
    """(Jx, Jy, Jz) built from the ladder operators.

    Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i), Jz = N - j.
    """
    return _cartesian(space.two_j)


@lru_cache(maxsize=None)
def _cartesian(two_j):
    space = SpinSpace(two_j)
    jm = ladder_lowering(space).matrix
    jp = jm.conj().T
    jx = Operator(space, (jp + jm) / 2, hermitian=True)
    jy = Operator(space, (jp - jm) / 2j, hermitian=True)
    jz = Operator(space, number_operator(space).matrix - space.j * np.eye(space.dim), hermitian=True)
    return jx, jy, jz


def direction_component(space, n):
    """J_n = n_x Jx + n_y Jy + n_z Jz for a unit :class:`Direction`."""
    if not isinstance(n, Direction):
        n = Direction(*n)
    jx, jy, jz = cartesian_components(space)
    m = n.x * jx.matrix + n.y * jy.matrix + n.z * jz.matrix
    return Operator(space, m, hermitian=True)


def parity_operator(space):
    """Pi = (-1)^N."""
    return _parity(space.two_j)


@lru_cache(maxsize=None)
def _parity(two_j):
    space = SpinSpace(two_j)
    signs = np.where(np.arange(space.dim) % 2 == 0, 1.0, -1.0)
    return Operator(space, np.diag(signs), hermitian=True)


def commutator(a, b):
    return a @ b - b @ a


def expectation(op, psi):
    """<psi|op|psi> as a complex number."""
    if op.space != psi.space:
        raise ArgumentError("operator and state act on different spaces")
    psi_a = psi.amplitudes
    return complex(np.vdot(psi_a, op.matrix @ psi_a))


def variance(op, psi):
    """<op^2> - <op>^2 for a hermitian operator, clamped at zero.

    ``<op^2>`` is evaluated as ||op psi||^2, which is nonnegative by
    construction and avoids forming the square.
    """
    if not op.hermitian:
        raise ArgumentError("variance requires a hermitian operator")
    if op.space != psi.space:
        raise ArgumentError("operator and state act on different spaces")
    phi = op.matrix @ psi.amplitudes
    second = float(np.vdot(phi, phi).real)
    first = float(np.vdot(psi.amplitudes, phi).real)
    return max(second - first * first, 0.0)
