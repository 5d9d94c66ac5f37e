"""Holonomy of the mechanical connection on the Hopf bundle S^3 -> S^2.

Conventions (all other choices are gauge-equivalent):

* Quaternions are (w, x, y, z) with Hamilton's product; points of S^3
  are unit quaternions.
* The circle fibre acts on the right, q -> q * e^{i phi}, with i the
  first imaginary unit; the fibre generator is V(q) = q * i.
* The bundle projection sends q, read as the complex pair
  (z1, z2) = (w + ix, y - iz), to
  (|z1|^2 - |z2|^2, 2 Re(z1 conj(z2)), 2 Im(z1 conj(z2))); this is
  invariant under the fibre action.
* The mechanical connection is A(u) = <u, V(q)>; its horizontal lift
  of a base path rho is generated by left multiplication with the
  angular-velocity quaternion of rho x rho', which carries no vertical
  component.
"""

from dataclasses import dataclass

import numpy as np

from . import deriv
from .errors import NormError, PeriodicityError, ProjectionDrift

NORM_TOL = 1e-8
DRIFT_TOL = 1e-6


# ---------------------------------------------------------------------------
# quaternion helpers


def qmul(a, b):
    """Hamilton product of quaternions with shape (..., 4)."""
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def qexp(u):
    """Exponential of a pure-imaginary quaternion (..., 4) with u[...,0]=0."""
    u = np.asarray(u, dtype=float)
    angle = np.linalg.norm(u[..., 1:], axis=-1)
    out = np.zeros(u.shape)
    out[..., 0] = np.cos(angle)
    scale = np.where(angle > 0, np.sinc(angle / np.pi), 1.0)
    out[..., 1:] = u[..., 1:] * scale[..., None]
    return out


def left_mult_matrix(a):
    """4x4 matrix of q -> a * q for a = (w, x, y, z)."""
    w, x, y, z = a
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    )


# right multiplication by the first imaginary unit: q -> q * i
RIGHT_I = np.array(
    [
        [0.0, -1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)


def fibre_generator(q):
    """V(q) = q * i, the tangent of the fibre action."""
    q = np.asarray(q, dtype=float)
    return q @ RIGHT_I.T


def complex_pair(q):
    """(z1, z2) coordinates of a quaternion; fibre acts as (z1, z2) e^{i phi}."""
    q = np.asarray(q, dtype=float)
    z1 = q[..., 0] + 1j * q[..., 1]
    z2 = q[..., 2] - 1j * q[..., 3]
    return z1, z2


@dataclass(frozen=True)
class UnitQuaternion:
    components: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.components, dtype=float)
        if c.shape != (4,):
            raise ValueError("quaternion needs 4 components")
        if abs(np.linalg.norm(c) - 1.0) > 1e-12:
            c = c / np.linalg.norm(c)
        object.__setattr__(self, "components", c)


def hopf_project(q):
    """Bundle projection S^3 -> S^2 (fibre-invariant)."""
    q = np.asarray(q, dtype=float)
    norms = np.linalg.norm(q, axis=-1)
    if np.any(np.abs(norms - 1.0) > NORM_TOL):
        raise NormError("quaternion norm deviates beyond tolerance")
    z1, z2 = complex_pair(q)
    w = z1 * np.conj(z2)
    return np.stack(
        [np.abs(z1) ** 2 - np.abs(z2) ** 2, 2.0 * w.real, 2.0 * w.imag], axis=-1
    )


def section_over(p):
    """A unit quaternion above the base point p (canonical local section)."""
    p = np.asarray(p, dtype=float)
    alpha = np.arccos(np.clip(p[0], -1.0, 1.0))
    beta = np.arctan2(p[2], p[1]) if alpha > 1e-14 else 0.0
    z2 = np.sin(alpha / 2.0) * np.exp(-1j * beta)
    return np.array([np.cos(alpha / 2.0), 0.0, z2.real, -z2.imag])


# ---------------------------------------------------------------------------
# paths and profiles


@dataclass(frozen=True)
class SpherePath:
    """Closed path on S^2 sampled at theta_m = 2*pi*m/K, m = 0..K."""

    samples: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=float)
        if s.ndim != 2 or s.shape[1] != 3 or s.shape[0] < 5:
            raise ValueError("samples must have shape (K+1, 3)")
        norms = np.linalg.norm(s, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise NormError("path samples must lie on the unit sphere")
        if np.linalg.norm(s[-1] - s[0]) > 1e-10:
            raise ValueError("path must be closed")
        object.__setattr__(self, "samples", s)

    @property
    def k(self):
        return self.samples.shape[0] - 1


@dataclass(frozen=True)
class VerticalProfile:
    """Periodic u(1)-valued profile sampled at theta_m = 2*pi*m/K."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.shape[0] < 5:
            raise ValueError("values must be a 1-d array of K+1 samples")
        if abs(v[-1] - v[0]) > 1e-10:
            raise PeriodicityError("profile endpoints disagree")
        object.__setattr__(self, "values", v)

    @property
    def k(self):
        return self.values.shape[0] - 1

    def integral(self):
        """Trapezoid of the profile over one period (spectrally accurate)."""
        core = self.values[:-1]
        return float(core.mean() * 2.0 * np.pi)


@dataclass(frozen=True)
class HolonomyResult:
    phase: float
    closure_error: float


def great_circle(k, axis="equator"):
    """The closed geodesic (cos, sin, 0) in base coordinates."""
    th = 2.0 * np.pi * np.arange(k + 1) / k
    if axis != "equator":
        raise ValueError("only the equatorial great circle is built in")
    pts = np.stack([np.cos(th), np.sin(th), np.zeros_like(th)], axis=1)
    pts[-1] = pts[0]
    return SpherePath(pts)


def constant_profile(k, value):
    return VerticalProfile(np.full(k + 1, float(value)))


def vertical_ode(fv, sigma0, k=2048):
    """Periodic solution of d(sigma)/d(theta) = fv with sigma(0) = sigma0.

    fv must be a zero-mean periodic callable of theta; otherwise no
    periodic solution exists and PeriodicityError is raised.
    """
    th = 2.0 * np.pi * np.arange(k) / k
    f = np.asarray(fv(th), dtype=float)
    if f.shape != (k,):
        f = np.broadcast_to(f, (k,)).astype(float)
    mean, periodic = deriv.fourier_antiderivative(f, axis=0)
    if abs(mean * 2.0 * np.pi) > 1e-8:
        raise PeriodicityError(
            f"forcing has nonzero mean {float(mean):.3e}; profile cannot close"
        )
    values = sigma0 + periodic
    values = np.concatenate([values, values[:1]])
    return VerticalProfile(values)


# ---------------------------------------------------------------------------
# lifting


def _angular_to_quaternion(omega):
    """Pure-imaginary quaternion A with d(pi(g q))/dt = omega x pi(q)
    for g' = A g. Calibrated against the projection Jacobian."""
    o1, o2, o3 = np.moveaxis(omega, -1, 0)
    zeros = np.zeros_like(o1)
    return 0.5 * np.stack([zeros, o1, o3, -o2], axis=-1)


def horizontal_lift(rho, profile, s0, return_path=False):
    """Lift of rho, horizontal for the connection A + sigma dtheta.

    Integrates s' = hor(rho') - sigma V(s) with RK4 over theta in
    [0, 2*pi], renormalizing each step. Returns (path, HolonomyResult)
    if return_path else HolonomyResult.
    """
    if isinstance(s0, UnitQuaternion):
        s0 = s0.components
    s0 = np.asarray(s0, dtype=float)
    if abs(np.linalg.norm(s0) - 1.0) > NORM_TOL:
        raise NormError("s0 is not a unit quaternion")
    k = rho.k
    if profile.k != k:
        raise ValueError("path and profile grids must agree")
    if np.linalg.norm(hopf_project(s0) - rho.samples[0]) > NORM_TOL:
        raise ValueError("s0 does not project to rho(0)")

    h = 2.0 * np.pi / k
    base = rho.samples[:-1]
    sig = profile.values[:-1]
    # nodes and midpoints via trigonometric interpolation
    fine_rho = deriv.fourier_refine(base, 2, axis=0)  # 2K points
    fine_rhodot = deriv.fourier_derivative(fine_rho, order=1, axis=0)
    fine_sig = deriv.fourier_refine(sig, 2, axis=0)

    def generator(idx_fine):
        p = fine_rho[idx_fine]
        pdot = fine_rhodot[idx_fine]
        omega = np.cross(p, pdot)
        a = _angular_to_quaternion(omega)
        m = _left_mult_batch(a)
        return m - fine_sig[idx_fine][:, None, None] * RIGHT_I

    # generator matrices at nodes (even fine indices) and midpoints (odd)
    m_nodes = generator(np.arange(0, 2 * k, 2))
    m_mid = generator(np.arange(1, 2 * k, 2))
    m_next = np.roll(m_nodes, -1, axis=0)

    eye = np.eye(4)
    k1 = m_nodes
    k2 = m_mid @ (eye + 0.5 * h * k1)
    k3 = m_mid @ (eye + 0.5 * h * k2)
    k4 = m_next @ (eye + h * k3)
    steps = eye + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    s = s0.copy()
    if return_path:
        path = np.empty((k + 1, 4))
        path[0] = s
        for m in range(k):
            s = steps[m] @ s
            s /= np.linalg.norm(s)
            path[m + 1] = s
        drift = np.abs(hopf_project(path) - rho.samples).max()
    else:
        # checking drift at a coarse stride keeps the fast path fast
        stride = max(1, k // 64)
        drift = 0.0
        for m in range(k):
            s = steps[m] @ s
            s /= np.linalg.norm(s)
            if m % stride == 0:
                drift = max(
                    drift, float(np.linalg.norm(hopf_project(s) - rho.samples[m + 1]))
                )
    if drift > DRIFT_TOL:
        raise ProjectionDrift(f"lift left the base path (drift {drift:.3e})")

    z1e, z2e = complex_pair(s)
    z10, z20 = complex_pair(s0)
    pairing = np.conj(z1e) * z10 + np.conj(z2e) * z20
    phase = float(np.angle(pairing))
    if phase <= -np.pi + 1e-9:  # pin the branch to (-pi, pi]
        phase += 2.0 * np.pi
    closure = float(np.linalg.norm(s - s0))
    result = HolonomyResult(phase=phase, closure_error=closure)
    if return_path:
        return path, result
    return result


def _left_mult_batch(a):
    """Batched 4x4 left-multiplication matrices for (..., 4) quaternions."""
    w, x, y, z = np.moveaxis(a, -1, 0)
    m = np.empty(a.shape[:-1] + (4, 4))
    m[..., 0, 0], m[..., 0, 1], m[..., 0, 2], m[..., 0, 3] = w, -x, -y, -z
    m[..., 1, 0], m[..., 1, 1], m[..., 1, 2], m[..., 1, 3] = x, w, -z, y
    m[..., 2, 0], m[..., 2, 1], m[..., 2, 2], m[..., 2, 3] = y, z, w, -x
    m[..., 3, 0], m[..., 3, 1], m[..., 3, 2], m[..., 3, 3] = z, -y, x, w
    return m


def holonomy(rho, profile):
    """Holonomy of A + sigma dtheta along rho, lifted from the canonical
    section point above rho(0)."""
    if np.max(np.linalg.norm(rho.samples - rho.samples[0], axis=1)) < 1e-14:
        # degenerate constant path: nothing moves
        return HolonomyResult(phase=0.0, closure_error=0.0)
    s0 = section_over(rho.samples[0])
    return horizontal_lift(rho, profile, s0)
