"""Discrete differential geometry of closed plane curves.

A curve is a periodic array of samples c(theta_j) on the uniform grid
theta_j = 2*pi*j/N. Conventions used by the whole package:

* J is the counterclockwise quarter-turn, n = J t.
* For a counterclockwise circle the normal points inward and kappa > 0.
* The discrete Frenet identities are D_theta t = kappa n and
  D_theta n = -kappa t, with D_theta the arc-length derivative.
"""

import csv
from dataclasses import dataclass, field

import numpy as np

from . import deriv
from .errors import LengthMismatch, RegularityError

EPS_REG = 1e-6


def quarter_turn(u):
    """Counterclockwise quarter-turn J applied to (..., 2) vectors."""
    return np.stack([-u[..., 1], u[..., 0]], axis=-1)


@dataclass(frozen=True)
class DiscreteCurve:
    """Closed plane curve sampled on the uniform parameter grid."""

    samples: np.ndarray

    def __post_init__(self):
        samples = np.ascontiguousarray(np.asarray(self.samples, dtype=float))
        if samples.ndim != 2 or samples.shape[1] != 2:
            raise ValueError("samples must have shape (N, 2)")
        n = samples.shape[0]
        if n < 8 or n % 2:
            raise ValueError(f"N must be even and >= 8, got {n}")
        object.__setattr__(self, "samples", samples)
        edges = np.linalg.norm(np.roll(samples, -1, axis=0) - samples, axis=1)
        perimeter = edges.sum()
        if perimeter <= 0.0 or edges.min() <= EPS_REG * perimeter / n:
            raise RegularityError("degenerate sample spacing")
        if self.signed_area() <= 0.0:
            raise ValueError("curve must be positively oriented")

    @property
    def n_samples(self):
        return self.samples.shape[0]

    @property
    def theta(self):
        n = self.n_samples
        return 2.0 * np.pi * np.arange(n) / n

    def signed_area(self):
        x, y = self.samples[:, 0], self.samples[:, 1]
        xn, yn = np.roll(x, -1), np.roll(y, -1)
        return 0.5 * np.sum(x * yn - xn * y)


@dataclass(frozen=True)
class FrenetData:
    """Per-sample Frenet frame, curvature, and parametrization speed."""

    tangent: np.ndarray
    normal: np.ndarray
    curvature: np.ndarray
    speed: np.ndarray
    backend: str = field(default=deriv.SPECTRAL)

    @property
    def n_samples(self):
        return self.speed.shape[0]

    @property
    def arclength_element(self):
        """dl per unit theta, i.e. |c_theta|."""
        return self.speed


def frenet(curve, backend=deriv.SPECTRAL):
    """Frenet frame, curvature and speed of a discrete curve."""
    return frenet_of_samples(curve.samples, backend)


def frenet_of_samples(c, backend=deriv.SPECTRAL):
    """As frenet, but on a raw (N, 2) sample array (no invariant checks)."""
    c_th = deriv.periodic_derivative(c, backend, order=1, axis=0)
    c_thth = deriv.periodic_derivative(c, backend, order=2, axis=0)
    speed = np.linalg.norm(c_th, axis=1)
    if speed.min() < EPS_REG * speed.mean():
        raise RegularityError("parametrization speed below regularity floor")
    tangent = c_th / speed[:, None]
    normal = quarter_turn(tangent)
    cross = c_th[:, 0] * c_thth[:, 1] - c_th[:, 1] * c_thth[:, 0]
    curvature = cross / speed**3
    return FrenetData(tangent, normal, curvature, speed, backend)


def arclength_derivative(fr, f):
    """D_theta f = (1/|c_theta|) d f / d theta along the sampled curve."""
    f = np.asarray(f, dtype=float)
    if f.shape[0] != fr.n_samples:
        raise LengthMismatch(f"expected length {fr.n_samples}, got {f.shape[0]}")
    df = deriv.periodic_derivative(f, fr.backend, order=1, axis=0)
    if f.ndim == 1:
        return df / fr.speed
    return df / fr.speed.reshape((-1,) + (1,) * (f.ndim - 1))


def decompose_velocity(fr, u):
    """Split a velocity field u into tangential and normal scalars.

    Returns (v, h) with u = v*t + h*n pointwise.
    """
    u = np.asarray(u, dtype=float)
    if u.shape != (fr.n_samples, 2):
        raise LengthMismatch(f"expected shape ({fr.n_samples}, 2), got {u.shape}")
    v = np.einsum("ij,ij->i", u, fr.tangent)
    h = np.einsum("ij,ij->i", u, fr.normal)
    return v, h


def recompose_velocity(fr, v, h):
    return v[:, None] * fr.tangent + h[:, None] * fr.normal


def cumulative_arclength(curve, theta):
    """Arc length from parameter 0 to each entry of theta (spectral)."""
    fr = frenet(curve, deriv.SPECTRAL)
    mean, periodic = deriv.fourier_antiderivative(fr.speed, axis=0)
    theta = np.asarray(theta, dtype=float)
    per = deriv.fourier_evaluate(periodic, np.mod(theta, 2.0 * np.pi))
    return mean * theta + per


def resample_by_arclength(curve, m):
    """Resample to m points with uniform arc-length spacing.

    The output starts at the arc-length position of the input's sample 0
    and traces the same image.
    """
    if m < 8 or m % 2:
        raise ValueError(f"M must be even and >= 8, got {m}")
    fr = frenet(curve, deriv.SPECTRAL)
    mean_speed, periodic = deriv.fourier_antiderivative(fr.speed, axis=0)
    total = mean_speed * 2.0 * np.pi

    def length_at(theta):
        wrapped = np.mod(theta, 2.0 * np.pi)
        return mean_speed * theta + deriv.fourier_evaluate(periodic, wrapped)

    targets = total * np.arange(m) / m
    # First guess by inverting a dense monotone table, then Newton.
    n_dense = 16 * curve.n_samples
    th_dense = 2.0 * np.pi * np.arange(n_dense + 1) / n_dense
    s_dense = length_at(th_dense)
    th = np.interp(targets, s_dense, th_dense)
    for _ in range(3):
        sp = deriv.fourier_evaluate(fr.speed, np.mod(th, 2.0 * np.pi))
        th = th - (length_at(th) - targets) / sp
    new_samples = deriv.fourier_evaluate(curve.samples, np.mod(th, 2.0 * np.pi))
    return DiscreteCurve(new_samples)


def perimeter(curve):
    fr = frenet(curve, deriv.SPECTRAL)
    return fr.speed.mean() * 2.0 * np.pi


def shape_distance(c1, c2):
    """RMS distance between curve images, modulo parametrization.

    Both curves are arc-length resampled to a common size and the RMS
    pointwise distance is minimized over continuous circular parameter
    shifts: the cross-correlation is a trigonometric polynomial whose
    maximum is located on a 16x refined grid and polished by Newton
    steps, so shifts between grid points cost nothing.
    """
    m = max(c1.n_samples, c2.n_samples)
    p = resample_by_arclength(c1, m).samples
    q = resample_by_arclength(c2, m).samples
    # d^2(phi) = (|p|^2 + |q|^2 - 2 corr(phi)) / m with
    # corr(phi) = sum_j p_j . q(theta_j + phi), a trig polynomial whose
    # rfft coefficients are conj(p^)(k) q^(k) summed over components.
    coef = (np.conj(np.fft.rfft(p, axis=0)) * np.fft.rfft(q, axis=0)).sum(axis=1)
    k = np.arange(m // 2 + 1)
    weights = np.full(m // 2 + 1, 2.0)
    weights[0] = 1.0
    if m % 2 == 0:
        weights[-1] = 1.0

    def corr(phi, order=0):
        phase = coef * np.exp(1j * k * phi)
        if order == 0:
            return (weights * phase.real).sum() / m
        if order == 1:
            return -(weights * k * phase.imag).sum() / m
        return -(weights * k**2 * phase.real).sum() / m

    fine = 16 * m
    dense = np.fft.irfft(coef, n=fine) * (fine / m)
    phi = 2.0 * np.pi * int(np.argmax(dense)) / fine
    for _ in range(4):
        curv = corr(phi, order=2)
        if curv >= -1e-12 * max(abs(corr(phi)), 1.0):
            break  # flat correlation (symmetric shapes): grid max is fine
        phi -= corr(phi, order=1) / curv
    # integer shifts evaluated directly are free of spectral round-off,
    # which matters when the curves are exactly aligned
    j0 = int(np.argmax(dense[::16]))
    direct = float(np.sum(p * np.roll(q, -j0, axis=0)))
    d2 = (np.sum(p * p) + np.sum(q * q) - 2.0 * max(corr(phi), direct)) / m
    return float(np.sqrt(max(d2, 0.0)))


def write_curve_csv(curve, path):
    """Serialize a curve as CSV rows theta,x,y."""
    theta = curve.theta
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta", "x", "y"])
        for th, (x, y) in zip(theta, curve.samples):
            writer.writerow([repr(float(th)), repr(float(x)), repr(float(y))])


def read_curve_csv(path):
    """Read a curve from the theta,x,y CSV format.

    Rejects non-uniform theta grids (1e-9 relative tolerance)."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if [h.strip() for h in header] != ["theta", "x", "y"]:
            raise ValueError(f"unexpected CSV header {header}")
        rows = [row for row in reader if row]
    data = np.array(rows, dtype=float)
    theta = data[:, 0]
    n = len(theta)
    expected = 2.0 * np.pi * np.arange(n) / n
    if np.max(np.abs(theta - expected)) > 1e-9 * 2.0 * np.pi:
        raise ValueError("theta grid is not uniform ascending from 0")
    return DiscreteCurve(data[:, 1:3])
