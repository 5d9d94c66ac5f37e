"""Hyperbolic curvature flow of closed plane curves.

The first-order system integrated here is

    c_t = h n + v t,
    h_t = D_theta(v h) - kappa (h^2/2 - 1),
    v_t = F^v,

with (h, v) the normal/tangential speeds in the Frenet frame. With zero
force and v(0) = 0, the tangential speed stays identically zero: the
discrete update never injects tangential velocity.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from . import deriv
from .curvegeo import (
    DiscreteCurve,
    arclength_derivative,
    frenet,
    frenet_of_samples,
    resample_by_arclength,
)
from .errors import LengthMismatch, RegularityError, SingularityStop
from .forcing import ZERO_FORCE

KAPPA_MAX = 1e3


@dataclass(frozen=True)
class FlowState:
    curve: DiscreteCurve
    h: np.ndarray
    v: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        n = self.curve.n_samples
        h = np.asarray(self.h, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if h.shape != (n,) or v.shape != (n,):
            raise LengthMismatch(f"h and v must have length {n}")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class Trajectory:
    states: list
    stop_reason: str  # "completed" | "singularity"

    @property
    def final(self):
        return self.states[-1]


def flow_rhs(state, force=ZERO_FORCE, backend=deriv.SPECTRAL):
    """Right-hand side (dc, dh, dv) of the flow at a state."""
    fr = frenet(state.curve, backend)
    h, v = state.h, state.v
    dc = h[:, None] * fr.normal + v[:, None] * fr.tangent
    dh = arclength_derivative(fr, v * h) - fr.curvature * (0.5 * h**2 - 1.0)
    dv = force.evaluate(state.curve.n_samples)
    return dc, dh, dv


def _rhs_raw(samples, h, v, force_values, backend):
    # Same as flow_rhs but on raw arrays, for use inside RK4 stages
    # where intermediate samples need not satisfy curve invariants.
    fr = frenet_of_samples(samples, backend)
    dc = h[:, None] * fr.normal + v[:, None] * fr.tangent
    dh = arclength_derivative(fr, v * h) - fr.curvature * (0.5 * h**2 - 1.0)
    return dc, dh, force_values, fr.curvature


def integrate(
    state0,
    force=ZERO_FORCE,
    T=1.0,
    dt=1e-3,
    backend=deriv.SPECTRAL,
    resample_every=0,
    raise_on_singularity=True,
):
    """Classical RK4 integration of the flow up to time T.

    Returns a Trajectory with the states at t = 0, dt, ..., T. Stops
    early when the curvature exceeds KAPPA_MAX or the parametrization
    degenerates; with raise_on_singularity the stop is reported as a
    SingularityStop carrying the partial trajectory.

    resample_every > 0 re-parametrizes the curve by arc length every
    that many steps (a pure Diff+(S^1) action on the trajectory).
    """
    if dt <= 0 or T <= 0:
        raise ValueError("T and dt must be positive")
    n_steps = max(1, int(round(T / dt)))
    step = T / n_steps
    n = state0.curve.n_samples
    force_values = force.evaluate(n)

    states = [state0]
    c = state0.curve.samples.copy()
    h = state0.h.copy()
    v = state0.v.copy()
    t = float(state0.time)

    def stop(reason):
        traj = Trajectory(states, reason)
        if raise_on_singularity:
            raise SingularityStop(
                f"flow stopped at t={t:.6g}: {reason}", trajectory=traj, last_time=t
            )
        return traj

    for i in range(n_steps):
        try:
            k1c, k1h, k1v, kappa = _rhs_raw(c, h, v, force_values, backend)
            if np.abs(kappa).max() > KAPPA_MAX:
                return stop("singularity")
            k2c, k2h, k2v, _ = _rhs_raw(
                c + 0.5 * step * k1c, h + 0.5 * step * k1h, v + 0.5 * step * k1v,
                force_values, backend,
            )
            k3c, k3h, k3v, _ = _rhs_raw(
                c + 0.5 * step * k2c, h + 0.5 * step * k2h, v + 0.5 * step * k2v,
                force_values, backend,
            )
            k4c, k4h, k4v, _ = _rhs_raw(
                c + step * k3c, h + step * k3h, v + step * k3v,
                force_values, backend,
            )
        except RegularityError:
            return stop("singularity")
        c = c + (step / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        h = h + (step / 6.0) * (k1h + 2.0 * k2h + 2.0 * k3h + k4h)
        v = v + (step / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        t = state0.time + (i + 1) * step
        try:
            new_curve = DiscreteCurve(c)
        except (RegularityError, ValueError):
            # the step collapsed or inverted the curve
            return stop("singularity")
        if resample_every and (i + 1) % resample_every == 0 and i + 1 < n_steps:
            curve = new_curve
            resampled = resample_by_arclength(curve, n)
            # transport h, v to the new parametrization
            fr = frenet(curve)
            u = h[:, None] * fr.normal + v[:, None] * fr.tangent
            # velocities at the resampled points via trig interpolation
            th_new = _matching_parameters(curve, resampled)
            u_new = deriv.fourier_evaluate(u, th_new)
            fr_new = frenet(resampled)
            v = np.einsum("ij,ij->i", u_new, fr_new.tangent)
            h = np.einsum("ij,ij->i", u_new, fr_new.normal)
            c = resampled.samples
            new_curve = resampled
        states.append(FlowState(new_curve, h, v, t))
    return Trajectory(states, "completed")


def _matching_parameters(curve, resampled):
    """Old-parameter values of the arc-length resampled grid points."""
    from .curvegeo import cumulative_arclength

    n = curve.n_samples
    th_dense = 2.0 * np.pi * np.arange(16 * n + 1) / (16 * n)
    s_dense = cumulative_arclength(curve, th_dense)
    total = s_dense[-1]
    targets = total * np.arange(n) / n
    return np.interp(targets, s_dense, th_dense)


def circle_reduction_oracle(r0, h0, T):
    """High-accuracy integration of the rotationally symmetric reduction.

    Solves R' = -h, h' = (1/R)(1 - h^2/2); the exact dynamics of a
    circle under the flow with v = 0.
    """
    if r0 <= 0:
        raise ValueError("R0 must be positive")

    def rhs(_t, y):
        r, h = y
        return [-h, (1.0 / r) * (1.0 - 0.5 * h**2)]

    def collapsed(_t, y):
        return y[0]

    collapsed.terminal = True
    collapsed.direction = -1

    sol = solve_ivp(
        rhs, (0.0, T), [float(r0), float(h0)], method="DOP853",
        rtol=1e-12, atol=1e-14, events=collapsed, dense_output=True,
    )
    if sol.status == 1:  # collapse event
        raise SingularityStop(
            f"circle collapsed at t={sol.t_events[0][0]:.6g}",
            last_time=float(sol.t_events[0][0]),
        )
    r, h = sol.y[:, -1]
    return float(r), float(h)
