"""Euler-Poincare residuals and reconstruction for SU(2)/U(1) sigma-models.

Lie-algebra values are coordinates in su(2) = R^3 with basis (e1, e2, e3)
and bracket [a, b] = 2 a x b, the commutator table of the imaginary
quaternion units under the embedding e1 -> j, e2 -> k, e3 -> i. The
isotropy split is h = span(e3), m = span(e1, e2), which is reductive:
[h, m] is contained in m identically in these coordinates.

A reduced field assigns a g-valued 1-form (sigma_x dx + sigma_t dt) to
every node of the unit rectangle; its Euler-Poincare and flatness
residuals are central-difference discretizations, and flat fields are
reconstructed to unit-quaternion grids by integrating dg = g sigma.
"""

from dataclasses import dataclass

import numpy as np

from .errors import FlatnessError, ShapeMismatch
from .hopf import qmul

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])


def bracket(a, b):
    """Lie bracket [a, b] = 2 a x b on su(2) coordinates."""
    return 2.0 * np.cross(a, b)


def m_part(a):
    """Projection onto m = span(e1, e2)."""
    out = np.array(a, dtype=float, copy=True)
    out[..., 2] = 0.0
    return out


def h_part(a):
    """Projection onto the isotropy algebra h = span(e3)."""
    out = np.zeros_like(np.asarray(a, dtype=float))
    out[..., 2] = np.asarray(a)[..., 2]
    return out


def _reductive_identity():
    # [h, m] subset of m, checked once on the basis.
    for em in (E1, E2):
        if bracket(E3, em)[2] != 0.0:
            raise AssertionError("split is not reductive")


_reductive_identity()


def lie_to_quaternion(a):
    """Coordinates (a1, a2, a3) -> imaginary quaternion a1 j + a2 k + a3 i."""
    a = np.asarray(a, dtype=float)
    out = np.zeros(a.shape[:-1] + (4,))
    out[..., 1] = a[..., 2]
    out[..., 2] = a[..., 0]
    out[..., 3] = a[..., 1]
    return out


@dataclass(frozen=True)
class LieField:
    """Components of a g-valued 1-form on the (x, t) grid.

    sigma_t and sigma_x have shape (M_x+1, M_t+1, 3); axis 0 is x,
    axis 1 is t, both uniform over [0, 1].
    """

    sigma_t: np.ndarray
    sigma_x: np.ndarray

    def __post_init__(self):
        st = np.ascontiguousarray(np.asarray(self.sigma_t, dtype=float))
        sx = np.ascontiguousarray(np.asarray(self.sigma_x, dtype=float))
        if st.ndim != 3 or st.shape[2] != 3:
            raise ShapeMismatch("sigma_t must have shape (M_x+1, M_t+1, 3)")
        if st.shape != sx.shape:
            raise ShapeMismatch(f"component shapes differ: {st.shape} vs {sx.shape}")
        if st.shape[0] < 2 or st.shape[1] < 2:
            raise ShapeMismatch("grid needs at least 2 nodes per direction")
        object.__setattr__(self, "sigma_t", st)
        object.__setattr__(self, "sigma_x", sx)

    @property
    def m_x(self):
        return self.sigma_t.shape[0] - 1

    @property
    def m_t(self):
        return self.sigma_t.shape[1] - 1

    @property
    def dx(self):
        return 1.0 / self.m_x

    @property
    def dt(self):
        return 1.0 / self.m_t


def constant_lie_field(sigma_t, sigma_x, m_x, m_t):
    """LieField with the same pair of algebra values at every node."""
    st = np.broadcast_to(np.asarray(sigma_t, float), (m_x + 1, m_t + 1, 3))
    sx = np.broadcast_to(np.asarray(sigma_x, float), (m_x + 1, m_t + 1, 3))
    return LieField(st.copy(), sx.copy())


def _central_x(f, dx):
    out = np.zeros_like(f)
    out[1:-1] = (f[2:] - f[:-2]) / (2.0 * dx)
    return out


def _central_t(f, dt):
    out = np.zeros_like(f)
    out[:, 1:-1] = (f[:, 2:] - f[:, :-2]) / (2.0 * dt)
    return out


def ep_residual(field):
    """Euler-Poincare residual div(sigma_m) + [sigma_h, sigma_m].

    Central differences at interior nodes; the boundary ring is zero.
    """
    st, sx = field.sigma_t, field.sigma_x
    res = _central_t(m_part(st), field.dt) + _central_x(m_part(sx), field.dx)
    res += bracket(h_part(st), m_part(st))
    res += bracket(h_part(sx), m_part(sx))
    res[0] = res[-1] = 0.0
    res[:, 0] = res[:, -1] = 0.0
    return res


def flatness_residual(field):
    """Zero-curvature residual d_t sigma_x - d_x sigma_t + [sigma_t, sigma_x]."""
    st, sx = field.sigma_t, field.sigma_x
    res = _central_t(sx, field.dt) - _central_x(st, field.dx)
    res += bracket(st, sx)
    res[0] = res[-1] = 0.0
    res[:, 0] = res[:, -1] = 0.0
    return res


FLATNESS_TOL = 1e-6


def _step(g, sig0, sig1, h):
    """One RK4 step of dg/ds = g * sigma(s) from node values at the ends."""
    mid = 0.5 * (sig0 + sig1)
    k1 = qmul(g, sig0)
    k2 = qmul(g + 0.5 * h * k1, mid)
    k3 = qmul(g + 0.5 * h * k2, mid)
    k4 = qmul(g + h * k3, sig1)
    g = g + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return g / np.linalg.norm(g)


def _integrate_line(g_start, sigmas, h):
    """Integrate dg = g sigma along one grid line; returns all node values."""
    out = np.empty((len(sigmas), 4))
    out[0] = g_start
    for i in range(len(sigmas) - 1):
        out[i + 1] = _step(out[i], sigmas[i], sigmas[i + 1], h)
    return out


def reconstruct(field, g0):
    """Integrate g^-1 dg = sigma over the rectangle from g(0,0) = g0.

    Returns the (M_x+1, M_t+1, 4) grid of unit quaternions obtained by
    integrating along x first and then along t. The transposed path
    order (t first, then x) must agree within 1e-6 at every node; a
    larger disagreement means the field is not flat and raises
    FlatnessError.
    """
    g0 = np.asarray(g0.components if hasattr(g0, "components") else g0, dtype=float)
    st = lie_to_quaternion(field.sigma_t)
    sx = lie_to_quaternion(field.sigma_x)
    m_x, m_t = field.m_x, field.m_t

    grid_a = np.empty((m_x + 1, m_t + 1, 4))
    bottom = _integrate_line(g0, sx[:, 0], field.dx)
    for i in range(m_x + 1):
        grid_a[i] = _integrate_line(bottom[i], st[i], field.dt)

    grid_b = np.empty((m_x + 1, m_t + 1, 4))
    left = _integrate_line(g0, st[0], field.dt)
    for j in range(m_t + 1):
        grid_b[:, j] = _integrate_line(left[j], sx[:, j], field.dx)

    gap = float(np.abs(grid_a - grid_b).max())
    if gap > FLATNESS_TOL:
        raise FlatnessError(
            f"path-ordered reconstructions disagree by {gap:.3e}; "
            "the field is not flat"
        )
    return grid_a
