import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinsqueeze import spin_algebra as sa
from spinsqueeze.errors import ArgumentError

TWO_J_RANGE = range(0, 41)


def ops(two_j):
    space = sa.make_space(two_j)
    return space, sa.cartesian_components(space)


@pytest.mark.parametrize("two_j,dim", [(1, 2), (10, 11), (0, 1)])
def test_make_space_dim(two_j, dim):
    space = sa.make_space(two_j)
    assert space.dim == dim
    assert space.j == two_j / 2


def test_make_space_rejects_negative():
    with pytest.raises(ArgumentError):
        sa.make_space(-1)


def test_number_operator_small_cases():
    np.testing.assert_array_equal(sa.number_operator(sa.make_space(1)).matrix, np.diag([0, 1]))
    np.testing.assert_array_equal(sa.number_operator(sa.make_space(2)).matrix, np.diag([0, 1, 2]))


@pytest.mark.parametrize("two_j", TWO_J_RANGE)
def test_number_operator_is_jz_plus_j(two_j):
    space, (_, _, jz) = ops(two_j)
    diff = sa.number_operator(space).matrix - (jz.matrix + space.j * np.eye(space.dim))
    assert np.max(np.abs(diff)) <= 1e-14


def test_lowering_spin_half():
    space = sa.make_space(1)
    out = sa.ladder_lowering(space) @ sa.number_state(space, 1)
    np.testing.assert_allclose(out, [1, 0])


def test_lowering_spin_one_against_m_formula():
    # <m-1|J-|m> = sqrt(j(j+1) - m(m-1)); |n=1> is m=0 for j=1
    j, m = 1, 0
    expected = math.sqrt(j * (j + 1) - m * (m - 1))
    space = sa.make_space(2)
    out = sa.ladder_lowering(space) @ sa.number_state(space, 1)
    np.testing.assert_allclose(out, [expected, 0, 0], atol=1e-15)
    assert expected == pytest.approx(math.sqrt(2))


@pytest.mark.parametrize("two_j", range(0, 16))
def test_lowering_matches_m_formula_everywhere(two_j):
    space = sa.make_space(two_j)
    jm = sa.ladder_lowering(space).matrix
    j = two_j / 2
    for n in range(1, space.dim):
        m = -j + n
        assert jm[n - 1, n] == pytest.approx(math.sqrt(j * (j + 1) - m * (m - 1)), abs=1e-13)
    assert np.all(jm[:, 0] == 0)
    assert not sa.ladder_lowering(space).hermitian


@pytest.mark.parametrize("two_j", TWO_J_RANGE)
def test_su2_closure_and_casimir(two_j):
    space, (jx, jy, jz) = ops(two_j)
    for a, b, c in ((jx, jy, jz), (jy, jz, jx), (jz, jx, jy)):
        err = sa.commutator(a, b).matrix - 1j * c.matrix
        assert np.max(np.abs(err), initial=0) <= 1e-12
    jp, jm = sa.ladder_raising(space), sa.ladder_lowering(space)
    assert np.max(np.abs(sa.commutator(jp, jm).matrix - 2 * jz.matrix), initial=0) <= 1e-12
    casimir = (jx @ jx + jy @ jy + jz @ jz).matrix
    j = space.j
    assert np.max(np.abs(casimir - j * (j + 1) * np.eye(space.dim))) <= 1e-12


def test_spin_half_is_half_pauli():
    _, (jx, jy, jz) = ops(1)
    # number basis runs from m=-1/2 upward, so Jz = diag(-1/2, 1/2)
    np.testing.assert_allclose(jx.matrix, 0.5 * np.array([[0, 1], [1, 0]]))
    np.testing.assert_allclose(jy.matrix, 0.5 * np.array([[0, 1j], [-1j, 0]]))
    np.testing.assert_allclose(jz.matrix, 0.5 * np.array([[-1, 0], [0, 1]]))


def test_spin_one_jz_spectrum():
    _, (_, _, jz) = ops(2)
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(jz.matrix)), [-1, 0, 1])


def test_direction_component_axes():
    space, (jx, _, jz) = ops(6)
    np.testing.assert_array_equal(sa.direction_component(space, sa.Z_AXIS).matrix, jz.matrix)
    np.testing.assert_array_equal(sa.direction_component(space, sa.X_AXIS).matrix, jx.matrix)


def test_direction_component_diagonal_spectrum():
    space, (_, _, jz) = ops(7)
    n = sa.Direction(1 / math.sqrt(2), 1 / math.sqrt(2), 0.0)
    eigs = np.linalg.eigvalsh(sa.direction_component(space, n).matrix)
    np.testing.assert_allclose(np.sort(eigs), np.sort(np.linalg.eigvalsh(jz.matrix)), atol=1e-10)


def test_direction_component_rejects_non_unit():
    with pytest.raises(ArgumentError):
        sa.direction_component(sa.make_space(2), (1.0, 1.0, 0.0))


unit_vectors = st.tuples(*[st.floats(-1, 1, allow_nan=False)] * 3).filter(
    lambda v: 1e-3 < math.sqrt(sum(c * c for c in v))
)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 30), unit_vectors)
def test_direction_component_spectrum_is_rotation_invariant(two_j, v):
    space = sa.make_space(two_j)
    n = sa.Direction.from_vector(v)
    spec = np.sort(np.linalg.eigvalsh(sa.direction_component(space, n).matrix))
    expected = -space.j + np.arange(space.dim)
    np.testing.assert_allclose(spec, expected, atol=1e-10)


def test_parity_small_cases_and_involution():
    np.testing.assert_array_equal(sa.parity_operator(sa.make_space(1)).matrix, np.diag([1, -1]))
    np.testing.assert_array_equal(sa.parity_operator(sa.make_space(2)).matrix, np.diag([1, -1, 1]))
    for two_j in TWO_J_RANGE:
        p = sa.parity_operator(sa.make_space(two_j)).matrix
        np.testing.assert_array_equal(p @ p, np.eye(two_j + 1))


@pytest.mark.parametrize("two_j", TWO_J_RANGE)
def test_parity_anticommutes_with_lowering(two_j):
    space = sa.make_space(two_j)
    p, jm = sa.parity_operator(space), sa.ladder_lowering(space)
    assert np.max(np.abs((p @ jm @ p).matrix + jm.matrix), initial=0) <= 1e-14


def test_expectation_examples():
    space = sa.make_space(1)
    N = sa.number_operator(space)
    assert sa.expectation(N, sa.number_state(space, 0)) == 0
    plus = sa.StateVector.normalized(space, [1, 1])
    assert sa.expectation(N, plus) == pytest.approx(0.5)
    rng = np.random.default_rng(3)
    psi = sa.StateVector.normalized(sa.make_space(9), rng.normal(size=10) + 1j * rng.normal(size=10))
    assert sa.expectation(sa.identity(psi.space), psi) == pytest.approx(1.0, abs=1e-14)


def test_expectation_space_mismatch():
    with pytest.raises(ArgumentError):
        sa.expectation(sa.number_operator(sa.make_space(2)), sa.number_state(sa.make_space(3), 0))


def test_variance_examples():
    space = sa.make_space(8)
    N = sa.number_operator(space)
    for n in range(space.dim):
        assert sa.variance(N, sa.number_state(space, n)) == 0.0
    half = sa.make_space(1)
    plus = sa.StateVector.normalized(half, [1, 1])
    assert sa.variance(sa.number_operator(half), plus) == pytest.approx(0.25)


@pytest.mark.parametrize("two_j", [1, 2, 5, 10, 21])
def test_variance_jx_on_ground_state(two_j):
    # <Jx^2> = (1/4)[2j(2N+1) - 2N^2 + J+^2 + J-^2] with N = 0 and <J+-^2> = 0 gives j/2
    space, (jx, _, _) = ops(two_j)
    expected = two_j * (2 * 0 + 1) / 4
    assert sa.variance(jx, sa.number_state(space, 0)) == pytest.approx(expected, abs=1e-12)


def test_variance_requires_hermitian():
    space = sa.make_space(2)
    with pytest.raises(ArgumentError):
        sa.variance(sa.ladder_lowering(space), sa.number_state(space, 0))


def test_hermitian_flag_is_checked():
    space = sa.make_space(1)
    with pytest.raises(ArgumentError):
        sa.Operator(space, [[0, 1], [0, 0]], hermitian=True)


def test_values_are_immutable():
    op = sa.number_operator(sa.make_space(3))
    with pytest.raises(ValueError):
        op.matrix[0, 0] = 5
    with pytest.raises(ArgumentError):
        sa.StateVector(sa.make_space(1), [1, 1])
    with pytest.raises(ArgumentError):
        sa.Direction(1, 1, 0)
