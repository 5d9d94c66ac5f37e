"""Curve geometry: Frenet data, resampling, shape distance, CSV I/O."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from unred import deriv, shapes
from unred.curvegeo import (
    DiscreteCurve,
    arclength_derivative,
    cumulative_arclength,
    decompose_velocity,
    frenet,
    perimeter,
    quarter_turn,
    read_curve_csv,
    recompose_velocity,
    resample_by_arclength,
    shape_distance,
    write_curve_csv,
)
from unred.errors import RegularityError


def test_quarter_turn_is_ccw_rotation():
    u = np.array([[1.0, 0.0], [0.0, 1.0], [2.0, -3.0]])
    v = quarter_turn(u)
    assert np.allclose(v, [[0.0, 1.0], [-1.0, 0.0], [3.0, 2.0]])
    # J^2 = -1 and J preserves length
    assert np.allclose(quarter_turn(v), -u)
    assert np.allclose(np.linalg.norm(v, axis=1), np.linalg.norm(u, axis=1))


def test_circle_frenet_exact():
    n, r = 128, 2.0
    fr = frenet(shapes.circle(n, radius=r))
    th = 2.0 * np.pi * np.arange(n) / n
    assert np.abs(fr.curvature - 1.0 / r).max() < 1e-12
    assert np.abs(fr.speed - r).max() < 1e-12
    assert np.abs(fr.tangent - np.stack([-np.sin(th), np.cos(th)], 1)).max() < 1e-12
    # inward normal for the counterclockwise circle
    assert np.abs(fr.normal + np.stack([np.cos(th), np.sin(th)], 1)).max() < 1e-12


def test_ellipse_curvature_closed_form():
    n, a, b = 256, 2.0, 1.0
    curve = shapes.ellipse(n, a=a, b=b)
    fr = frenet(curve)
    expected = oracles.ellipse_curvature(a, b, curve.theta)
    assert np.abs(fr.curvature - expected).max() < 1e-10


def test_ellipse_perimeter_quadrature_oracle():
    a, b = 2.0, 1.0
    assert abs(perimeter(shapes.ellipse(512, a=a, b=b)) - oracles.ellipse_perimeter(a, b)) < 1e-10


def test_frenet_identities_spectral():
    """D_theta t = kappa n and D_theta n = -kappa t on a smooth curve."""
    curve = shapes.rounded_square(256)
    fr = frenet(curve)
    rt = arclength_derivative(fr, fr.tangent) - fr.curvature[:, None] * fr.normal
    rn = arclength_derivative(fr, fr.normal) + fr.curvature[:, None] * fr.tangent
    assert np.abs(rt).max() < 1e-8
    assert np.abs(rn).max() < 1e-8


@pytest.mark.parametrize(
    "make", [shapes.circle, shapes.ellipse, shapes.rounded_square]
)
def test_frenet_identity_second_order_difference(make):
    """Identity residuals decay at order >= 2 with the stencil backend."""
    errs = []
    for n in (128, 256, 512):
        fr = frenet(make(n), deriv.DIFFERENCE)
        res = arclength_derivative(fr, fr.tangent) - fr.curvature[:, None] * fr.normal
        errs.append(np.abs(res).max())
    orders = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert orders.min() > 1.9


def test_difference_curvature_matches_independent_stencil():
    curve = shapes.ellipse(128)
    fr = frenet(curve, deriv.DIFFERENCE)
    assert np.abs(fr.curvature - oracles.stencil_curvature(curve.samples)).max() < 1e-11


@pytest.mark.parametrize(
    "make", [shapes.circle, shapes.ellipse, shapes.rounded_square]
)
def test_total_curvature_is_two_pi(make):
    fr = frenet(make(256))
    total = float((fr.curvature * fr.speed).mean() * 2.0 * np.pi)
    assert abs(total - 2.0 * np.pi) < 1e-10


def test_curve_validation():
    with pytest.raises(ValueError):
        DiscreteCurve(np.zeros((7, 2)))  # too small / odd
    with pytest.raises(ValueError):
        DiscreteCurve(shapes.circle(16).samples[::-1])  # clockwise
    samples = shapes.circle(16).samples.copy()
    samples[3] = samples[2]  # coincident nodes
    with pytest.raises(RegularityError):
        DiscreteCurve(samples)


def test_cumulative_arclength_circle():
    curve = shapes.circle(64, radius=2.0)
    th = np.linspace(0.0, 2.0 * np.pi, 7)
    assert np.abs(cumulative_arclength(curve, th) - 2.0 * th).max() < 1e-12


def test_resample_by_arclength_uniform_speed():
    curve = shapes.ellipse(256)
    res = resample_by_arclength(curve, 256)
    fr = frenet(res)
    assert np.abs(fr.speed - fr.speed.mean()).max() < 1e-8 * fr.speed.mean()
    assert abs(perimeter(res) - perimeter(curve)) < 1e-8


def test_velocity_decomposition_roundtrip():
    rng = np.random.default_rng(7)
    curve = shapes.ellipse(64)
    fr = frenet(curve)
    u = rng.normal(size=(64, 2))
    v, h = decompose_velocity(fr, u)
    assert np.abs(recompose_velocity(fr, v, h) - u).max() < 1e-12


def test_shape_distance_reparametrization_invariance():
    curve = shapes.ellipse(128)
    rep = shapes.reparametrize(curve, shapes.sine_reparam(0.3))
    assert shape_distance(curve, rep) < 1e-6
    assert shape_distance(curve, curve) < 1e-12


def test_shape_distance_detects_difference():
    d = shape_distance(shapes.circle(64, radius=1.0), shapes.circle(64, radius=1.5))
    assert 0.3 < d < 0.7  # RMS of a 0.5 radial gap


@settings(max_examples=20, deadline=None)
@given(
    amplitude=st.floats(-0.5, 0.5),
    angle=st.floats(0.0, 2.0 * np.pi),
    seed=st.integers(0, 2**31 - 1),
)
def test_shape_distance_invariance_property(amplitude, angle, seed):
    """shape_distance is insensitive to any smooth reparametrization."""
    rng = np.random.default_rng(seed)
    curve = DiscreteCurve(oracles.random_trig_curve(rng, 64))

    def phi(theta):
        return theta + angle + amplitude * np.sin(theta)

    assert shape_distance(curve, shapes.reparametrize(curve, phi)) < 1e-5


def test_csv_roundtrip_is_exact(tmp_path):
    curve = shapes.ellipse(64)
    path = tmp_path / "curve.csv"
    write_curve_csv(curve, path)
    back = read_curve_csv(path)
    assert np.array_equal(back.samples, curve.samples)


def test_csv_rejects_nonuniform_grid(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("theta,x,y\n0.0,1.0,0.0\n0.5,0.0,1.0\n1.0,-1.0,0.0\n")
    with pytest.raises(ValueError):
        read_curve_csv(path)
