"""Reduced sigma-model: bracket algebra, residuals, reconstruction."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from unred.errors import FlatnessError, ShapeMismatch
from unred.hopf import hopf_project, qmul
from unred.sigma import (
    E1,
    E2,
    E3,
    LieField,
    bracket,
    constant_lie_field,
    ep_residual,
    flatness_residual,
    h_part,
    lie_to_quaternion,
    m_part,
    reconstruct,
)

vectors = st.lists(st.floats(-2.0, 2.0), min_size=3, max_size=3).map(np.array)

IDENTITY = np.array([1.0, 0.0, 0.0, 0.0])


def test_structure_constants():
    assert np.array_equal(bracket(E1, E2), 2.0 * E3)
    assert np.array_equal(bracket(E2, E3), 2.0 * E1)
    assert np.array_equal(bracket(E3, E1), 2.0 * E2)


@settings(max_examples=30, deadline=None)
@given(a=vectors, b=vectors, c=vectors)
def test_bracket_is_a_lie_bracket(a, b, c):
    assert np.abs(bracket(a, a)).max() < 1e-12
    assert np.abs(bracket(a, b) + bracket(b, a)).max() < 1e-12
    jacobi = (
        bracket(a, bracket(b, c))
        + bracket(b, bracket(c, a))
        + bracket(c, bracket(a, b))
    )
    assert np.abs(jacobi).max() < 1e-9


def test_bracket_matches_quaternion_commutator():
    rng = np.random.default_rng(11)
    a, b = rng.normal(size=3), rng.normal(size=3)
    qa, qb = lie_to_quaternion(a), lie_to_quaternion(b)
    comm = qmul(qa, qb) - qmul(qb, qa)
    assert np.abs(comm - lie_to_quaternion(bracket(a, b))).max() < 1e-12


def test_split_projections():
    v = np.array([1.0, 2.0, 3.0])
    assert np.array_equal(m_part(v), [1.0, 2.0, 0.0])
    assert np.array_equal(h_part(v), [0.0, 0.0, 3.0])
    assert np.array_equal(m_part(v) + h_part(v), v)
    # reductive: bracketing h against m stays in m
    assert bracket(E3, E1)[2] == 0.0 and bracket(E3, E2)[2] == 0.0


def test_field_validation():
    with pytest.raises(ShapeMismatch):
        LieField(np.zeros((4, 4, 2)), np.zeros((4, 4, 2)))
    with pytest.raises(ShapeMismatch):
        LieField(np.zeros((4, 4, 3)), np.zeros((5, 4, 3)))


def test_ep_residual_bracket_case():
    """Constant sigma_t = alpha e3 + beta e1 leaves only the bracket
    term [sigma_h, sigma_m] = 2 alpha beta e2."""
    alpha, beta = 0.3, 0.7
    field = constant_lie_field(alpha * E3 + beta * E1, np.zeros(3), 12, 12)
    res = ep_residual(field)
    assert np.abs(res[1:-1, 1:-1] - 2.0 * alpha * beta * E2).max() < 1e-12
    assert np.abs(res[0]).max() == 0.0 and np.abs(res[:, 0]).max() == 0.0


def test_ep_residual_ignores_pure_h_constant_shift():
    """Adding a constant h-valued field to a pure-h sigma changes
    nothing: every term sees only the (zero) m-part."""
    base = constant_lie_field(0.4 * E3, 0.2 * E3, 10, 10)
    shifted = LieField(base.sigma_t + 0.9 * E3, base.sigma_x + 0.9 * E3)
    assert np.array_equal(ep_residual(base), ep_residual(shifted))


def test_flatness_residual_cases():
    flat = constant_lie_field(0.5 * E1, 0.5 * E1, 8, 8)
    assert np.abs(flatness_residual(flat)).max() < 1e-14
    crossed = constant_lie_field(E1, E2, 8, 8)
    res = flatness_residual(crossed)
    assert np.abs(res[1:-1, 1:-1] - 2.0 * E3).max() < 1e-12


def test_reconstruct_zero_field_is_constant():
    field = constant_lie_field(np.zeros(3), np.zeros(3), 6, 6)
    grid = reconstruct(field, IDENTITY)
    assert np.abs(grid - IDENTITY).max() < 1e-14


def test_reconstruct_exp_field_closed_form():
    """sigma_t = sigma_x = xi in m integrates to g = exp((t + x) xi)."""
    xi = 0.4 * E1
    m = 16
    field = constant_lie_field(xi, xi, m, m)
    grid = reconstruct(field, IDENTITY)
    s = np.arange(m + 1) / m
    total = s[:, None] + s[None, :]
    expected = np.empty((m + 1, m + 1, 4))
    for i in range(m + 1):
        for j in range(m + 1):
            expected[i, j] = oracles.quaternion_exp(total[i, j] * np.array([xi[2], xi[0], xi[1]]))
    assert np.abs(grid - expected).max() < 1e-8


def test_reconstruct_respects_initial_point():
    xi = 0.3 * E2
    field = constant_lie_field(xi, xi, 8, 8)
    g0 = np.array([np.cos(0.2), np.sin(0.2), 0.0, 0.0])
    grid = reconstruct(field, g0)
    base = reconstruct(field, IDENTITY)
    # left translation by g0 of the identity-based grid
    assert np.abs(grid - qmul(np.broadcast_to(g0, base.shape), base)).max() < 1e-12


def test_reconstruct_rejects_nonflat_field():
    field = constant_lie_field(E1, E2, 12, 12)
    with pytest.raises(FlatnessError):
        reconstruct(field, IDENTITY)


def test_exp_field_projects_to_geodesic():
    """hopf_project of the reconstructed exp-field traces a great
    circle: the spherical geodesic residual p'' + |p'|^2 p vanishes at
    second order in the grid spacing."""
    xi = 0.5 * E1
    errs = []
    for m in (16, 32, 64):
        field = constant_lie_field(xi, np.zeros(3), 4, m)
        grid = reconstruct(field, IDENTITY)
        path = hopf_project(grid[0])  # one coordinate line, shape (m+1, 3)
        dt = 1.0 / m
        d1 = (path[2:] - path[:-2]) / (2.0 * dt)
        d2 = (path[2:] - 2.0 * path[1:-1] + path[:-2]) / dt**2
        speed2 = np.einsum("ij,ij->i", d1, d1)
        res = d2 + speed2[:, None] * path[1:-1]
        errs.append(np.abs(res).max())
    orders = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert orders.min() > 1.9


def test_geodesic_speed_constant():
    xi = 0.5 * E1
    field = constant_lie_field(xi, np.zeros(3), 4, 64)
    path = hopf_project(reconstruct(field, IDENTITY)[0])
    steps = np.linalg.norm(np.diff(path, axis=0), axis=1)
    assert steps.std() < 1e-9 * steps.mean()
