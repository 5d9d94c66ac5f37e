"""Independent reference computations used to pin expected test values.

Everything here is derived by a route different from the implementation
under test: closed-form calculus, low-order stencils written from
scratch, or reduced ODEs solved with scipy integrators.
"""

import numpy as np
from scipy.integrate import quad
from scipy.optimize import root


def ellipse_curvature(a, b, theta):
    """Closed-form curvature of (a cos, b sin) at parameter theta."""
    theta = np.asarray(theta, dtype=float)
    num = a * b
    den = (a * a * np.sin(theta) ** 2 + b * b * np.cos(theta) ** 2) ** 1.5
    return num / den


def ellipse_perimeter(a, b):
    """Perimeter by adaptive quadrature of the speed |c'(theta)|."""
    val, _ = quad(
        lambda th: np.hypot(a * np.sin(th), b * np.cos(th)), 0.0, 2.0 * np.pi,
        limit=200,
    )
    return val


def stencil_curvature(samples):
    """Curvature from plain 3-point periodic stencils (2nd order).

    Written directly from kappa = (x'y'' - y'x'') / |c'|^3 with
    roll-based central differences; shares no code with the package.
    """
    n = samples.shape[0]
    h = 2.0 * np.pi / n
    d1 = (np.roll(samples, -1, axis=0) - np.roll(samples, 1, axis=0)) / (2 * h)
    d2 = (np.roll(samples, -1, axis=0) - 2 * samples + np.roll(samples, 1, axis=0)) / h**2
    cross = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
    return cross / np.linalg.norm(d1, axis=1) ** 3


def radial_matching_profile(r0, r1, t):
    """Exact radius profile of the concentric-circles boundary problem.

    For boundary data r(0) = r0, r(1) = r1 with circles concentric and
    uniformly parametrized, the governing equation for the radius
    reduces to r'' = r'^2 / (2 r) (all theta-modes but the mean vanish,
    and the metric operator is the identity on theta-constants). With
    u = sqrt(r) this is u'' = 0, so

        r(t) = (sqrt(r0) + (sqrt(r1) - sqrt(r0)) t)^2.
    """
    t = np.asarray(t, dtype=float)
    return (np.sqrt(r0) + (np.sqrt(r1) - np.sqrt(r0)) * t) ** 2


def _first_derivative(vals, d):
    """Second-order first derivative: central interior, one-sided edges."""
    out = np.empty_like(vals)
    out[1:-1] = (vals[2:] - vals[:-2]) / (2.0 * d)
    out[0] = (-1.5 * vals[0] + 2.0 * vals[1] - 0.5 * vals[2]) / d
    out[-1] = (1.5 * vals[-1] - 2.0 * vals[-2] + 0.5 * vals[-3]) / d
    return out


def solve_radial_matching(r0, r1, m_t):
    """Discrete 1-D radial reduction of the concentric-circles problem.

    For concentric, uniformly parametrized circles the field equations
    reduce to a two-point problem for the radius r(t):

        d/dt(h) + h^2 / (2 r) = 0,   h = -dr/dt,

    discretized with the same second-order stencils (central interior,
    one-sided edges for the jet) and solved with a scipy root-finder —
    an independent route to the same solution as the 2-D solver.
    """
    dt = 1.0 / m_t

    def residual(inner):
        r = np.concatenate([[r0], inner, [r1]])
        h = -_first_derivative(r, dt)
        div = (h[2:] - h[:-2]) / (2.0 * dt)
        return div + 0.5 * h[1:-1] ** 2 / r[1:-1]

    t = np.arange(1, m_t) / m_t
    guess = radial_matching_profile(r0, r1, t)
    sol = root(residual, guess, tol=1e-13)
    if not sol.success:
        raise RuntimeError(f"radial oracle failed: {sol.message}")
    return np.concatenate([[r0], sol.x, [r1]])


def quaternion_exp(u):
    """exp of the pure quaternion (0, u1, u2, u3) by the cos/sin formula."""
    u = np.asarray(u, dtype=float)
    angle = np.linalg.norm(u)
    out = np.zeros(4)
    out[0] = np.cos(angle)
    if angle > 0:
        out[1:] = np.sin(angle) * u / angle
    return out


def random_trig_curve(rng, n, modes=3, scale=0.15):
    """Random smooth positively-oriented closed curve (trig polynomial).

    A unit circle perturbed by a few random low-frequency Fourier modes,
    small enough to stay embedded.
    """
    theta = 2.0 * np.pi * np.arange(n) / n
    r = np.ones_like(theta)
    for k in range(1, modes + 1):
        r += scale / k * (
            rng.uniform(-1, 1) * np.cos(k * theta)
            + rng.uniform(-1, 1) * np.sin(k * theta)
        )
    return np.stack([r * np.cos(theta), r * np.sin(theta)], axis=1)


def smooth_test_field(m_x, m_t, n, amp=0.1):
    """Manufactured smooth curve family c(x, t, theta) for residual
    self-consistency checks: a circle with smoothly varying radius and
    center, analytic in all three variables."""
    theta = 2.0 * np.pi * np.arange(n) / n
    xg = np.arange(m_x + 1) / m_x
    tg = np.arange(m_t + 1) / m_t
    vals = np.empty((m_x + 1, m_t + 1, n, 2))
    for i, x in enumerate(xg):
        for j, t in enumerate(tg):
            r = 1.0 + amp * np.sin(np.pi * x) * np.cos(np.pi * t)
            cx = amp * np.sin(2 * np.pi * t) * x * (1 - x)
            cy = amp * np.cos(np.pi * x) * t * (1 - t)
            vals[i, j, :, 0] = cx + r * np.cos(theta) * (1 + 0.1 * amp * np.sin(theta) * x)
            vals[i, j, :, 1] = cy + r * np.sin(theta)
    return vals
