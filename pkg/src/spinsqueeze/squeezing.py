"""Spectroscopic squeezing parameter along arbitrary directions (matrix path).

    xi^2(n1) = 2j (Delta J_n1)^2 / (<J_n2>^2 + <J_n3>^2)

for an orthonormal right-handed triad (n1, n2, n3).  The denominator equals
|<J>|^2 - <J_n1>^2, so the value does not depend on how n2, n3 are rotated
about n1.
"""

from dataclasses import dataclass

import numpy as np

from . import spin_algebra as sa
from .errors import UndefinedSqueezingError

DENOMINATOR_CUTOFF = 1e-12


@dataclass(frozen=True)
class SqueezingReport:
    n1: sa.Direction
    xi2: float
    variance_n1: float
    mean_spin: tuple
    denominator: float


def mean_spin(psi):
    """(<Jx>, <Jy>, <Jz>) as a real array."""
    return np.array([sa.expectation(op, psi).real for op in sa.cartesian_components(psi.space)])


def orthogonal_triad(n1):
    """Complete ``n1`` to a right-handed orthonormal frame (n1, n2, n3).

    n2 is the part of a coordinate axis perpendicular to n1, n1 x (e x n1),
    taking e as the axis along which n1 has its smallest absolute component
    (ties go to x, then y, then z) so the projection is never degenerate.
    n3 = n1 x n2.  For n1 = z this gives n2 = x, n3 = y.
    """
    v = n1.as_array()
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(v)))] = 1.0
    n2 = np.cross(v, np.cross(axis, v))
    n2 /= np.linalg.norm(n2)
    n3 = np.cross(v, n2)
    n3 /= np.linalg.norm(n3)
    # + 0.0 turns -0.0 into 0.0 for stable printing
    return sa.Direction(*(n2 + 0.0)), sa.Direction(*(n3 + 0.0))


def squeezing_parameter(psi, n1, triad=None):
    """Squeezing report for measurement axis ``n1``.

    Parameters
    ----------
    psi : StateVector
    n1 : Direction
    triad : (Direction, Direction), optional
        Explicit (n2, n3); defaults to :func:`orthogonal_triad`.  Any
        orthonormal pair perpendicular to n1 gives the same xi^2.

    Raises
    ------
    UndefinedSqueezingError
        When <J_n2>^2 + <J_n3>^2 < 1e-12.
    """
    if not isinstance(n1, sa.Direction):
        n1 = sa.Direction(*n1)
    n2, n3 = triad if triad is not None else orthogonal_triad(n1)
    space = psi.space
    m = mean_spin(psi)
    denom = float(np.dot(n2.as_array(), m) ** 2 + np.dot(n3.as_array(), m) ** 2)
    var = sa.variance(sa.direction_component(space, n1), psi)
    if denom < DENOMINATOR_CUTOFF:
        raise UndefinedSqueezingError(
            f"undefined squeezing direction: mean spin has no component "
            f"perpendicular to n1=({n1.x:g}, {n1.y:g}, {n1.z:g}) (denominator {denom:.3e})"
        )
    return SqueezingReport(
        n1=n1,
        xi2=space.two_j * var / denom,
        variance_n1=var,
        mean_spin=tuple(float(c) for c in m),
        denominator=denom,
    )


AXES = {"x": sa.X_AXIS, "y": sa.Y_AXIS, "z": sa.Z_AXIS}


def squeezing_xyz(psi):
    """Reports along x, y and z.

    An axis whose denominator vanishes yields ``None`` in its slot instead
    of raising, so the other two axes are still reported.
    """
    out = []
    for n1 in AXES.values():
        try:
            out.append(squeezing_parameter(psi, n1))
        except UndefinedSqueezingError:
            out.append(None)
    return tuple(out)


def xi_z_number_form(psi):
    """2j (Delta N)^2 / |<J->|^2, the z-axis parameter written in number/ladder form."""
    space = psi.space
    var_n = sa.variance(sa.number_operator(space), psi)
    jm = sa.expectation(sa.ladder_lowering(space), psi)
    if abs(jm) ** 2 < DENOMINATOR_CUTOFF:
        raise UndefinedSqueezingError("undefined squeezing direction: <J-> vanishes")
    return space.two_j * var_n / abs(jm) ** 2
