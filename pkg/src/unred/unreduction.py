"""Un-reduced field equations for spatiotemporal curve matching.

A curve field c(x, t, theta) lives on the unit rectangle with uniform
grid spacings. Its first jet splits in the Frenet frame of each member
curve as

    c_x = v_x t + h_x n,      c_t = v_t t + h_t n,

and the coupled field equations whose residuals are assembled here are

    d_x(P h_x) + d_t(P h_t) = D_theta(h_x P v_x + h_t P v_t) - kappa H,
    d_x(P v_x) + d_t(P v_t) = F^v,

with H = (h_x P h_x + h_t P h_t)/2 and P the Sobolev metric operator.

The Dirichlet boundary-value solver uses inexact Newton iterations: the
linearized residual is solved matrix-free by LGMRES, preconditioned by
an exact frozen-coefficient inverse assembled per theta-Fourier mode.
Simple descent in pseudo-time cannot work here: linearized about a
radius-changing solution, the transport and curvature terms contribute
an anti-diffusive + m^2 h_t^2 (P/s^2 - 1/(2 s^3)) term in the theta
frequency m, so the Jacobian is indefinite (wave-like between (x, t)
and theta) and every first-order relaxation has exponentially growing
high-frequency modes.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sparse
from scipy.sparse.linalg import LinearOperator, gmres

from . import deriv
from .curvegeo import DiscreteCurve, quarter_turn, shape_distance
from .errors import CornerMismatch, NonConvergence, RegularityError
from .forcing import ZERO_FORCE
from .shapes import reparametrize

EPS_REG = 1e-6
CORNER_TOL = 1e-8


# ---------------------------------------------------------------------------
# field container


@dataclass(frozen=True)
class CurveField:
    """(M_x+1) x (M_t+1) grid of closed curves with a common N.

    values has shape (M_x+1, M_t+1, N, 2); axis 0 is x, axis 1 is t,
    both on uniform grids over [0, 1].
    """

    values: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.values, dtype=float))
        if v.ndim != 4 or v.shape[3] != 2:
            raise ValueError("values must have shape (M_x+1, M_t+1, N, 2)")
        if v.shape[0] < 2 or v.shape[1] < 2:
            raise ValueError("grid needs at least 2 nodes per direction")
        n = v.shape[2]
        if n < 8 or n % 2:
            raise ValueError(f"N must be even and >= 8, got {n}")
        object.__setattr__(self, "values", v)

    @property
    def m_x(self):
        return self.values.shape[0] - 1

    @property
    def m_t(self):
        return self.values.shape[1] - 1

    @property
    def n_theta(self):
        return self.values.shape[2]

    @property
    def dx(self):
        return 1.0 / self.m_x

    @property
    def dt(self):
        return 1.0 / self.m_t

    def curve_at(self, i, j):
        return DiscreteCurve(self.values[i, j])

    def validate_curves(self):
        for i in range(self.m_x + 1):
            for j in range(self.m_t + 1):
                self.curve_at(i, j)


def constant_field(curve, m_x, m_t):
    vals = np.broadcast_to(
        curve.samples, (m_x + 1, m_t + 1) + curve.samples.shape
    ).copy()
    return CurveField(vals)


def field_from_function(fn, m_x, m_t, n):
    """Sample c(x, t, theta) on the grid; fn(x, t, theta_array) -> (N, 2)."""
    theta = 2.0 * np.pi * np.arange(n) / n
    vals = np.empty((m_x + 1, m_t + 1, n, 2))
    for i in range(m_x + 1):
        for j in range(m_t + 1):
            vals[i, j] = fn(i / m_x, j / m_t, theta)
    return CurveField(vals)


def make_boundary_field(bottom, top, left, right):
    """Assemble a Dirichlet boundary into a field (interior Coons-filled).

    bottom/top: sequences of M_x+1 curves at t = 0 and t = 1;
    left/right: sequences of M_t+1 curves at x = 0 and x = 1.
    Edges must agree at the four corners to within 1e-8.
    """
    m_x = len(bottom) - 1
    m_t = len(left) - 1
    if len(top) != m_x + 1 or len(right) != m_t + 1:
        raise ValueError("edge lengths are inconsistent")
    n = bottom[0].n_samples
    corners = [
        (bottom[0], left[0], "x=0,t=0"),
        (bottom[-1], right[0], "x=1,t=0"),
        (top[0], left[-1], "x=0,t=1"),
        (top[-1], right[-1], "x=1,t=1"),
    ]
    for a, b, where in corners:
        gap = np.abs(a.samples - b.samples).max()
        if gap > CORNER_TOL:
            raise CornerMismatch(f"boundary edges disagree at corner {where}: {gap:.3e}")
    vals = np.zeros((m_x + 1, m_t + 1, n, 2))
    for i in range(m_x + 1):
        vals[i, 0] = bottom[i].samples
        vals[i, -1] = top[i].samples
    for j in range(m_t + 1):
        vals[0, j] = left[j].samples
        vals[-1, j] = right[j].samples
    return CurveField(coons_fill(vals))


def coons_fill(vals):
    """Fill the interior by transfinite (Coons) blending of the edges."""
    vals = np.array(vals, dtype=float)
    m_x = vals.shape[0] - 1
    m_t = vals.shape[1] - 1
    x = (np.arange(m_x + 1) / m_x)[:, None, None, None]
    t = (np.arange(m_t + 1) / m_t)[None, :, None, None]
    left = vals[0][None, :]
    right = vals[-1][None, :]
    bottom = vals[:, 0][:, None]
    top = vals[:, -1][:, None]
    # difference form: exact (no round-off) when opposite edges agree
    c00, c10, c01, c11 = vals[0, 0], vals[-1, 0], vals[0, -1], vals[-1, -1]
    blend = (
        left
        + x * (right - left)
        + bottom
        + t * (top - bottom)
        - (c00 + x * (c10 - c00) + t * (c01 - c00) + x * t * (c11 - c10 - c01 + c00))
    )
    out = vals.copy()
    out[1:-1, 1:-1] = blend[1:-1, 1:-1]
    return out


def circle_to_circle_boundary(n, m_x, m_t, r0=1.0, r1=2.0):
    """x-independent Dirichlet data: radius r0 at t=0, r1 at t=1,
    linear-in-t side edges."""
    theta = 2.0 * np.pi * np.arange(n) / n
    ring = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    vals = np.empty((m_x + 1, m_t + 1, n, 2))
    for j in range(m_t + 1):
        r = r0 + (r1 - r0) * j / m_t
        vals[:, j] = r * ring
    return CurveField(vals)


# ---------------------------------------------------------------------------
# jets and residuals


@dataclass(frozen=True)
class JetDecomposition:
    """Frenet-frame components of the (x, t) jet, plus the density H."""

    h_t: np.ndarray
    v_t: np.ndarray
    h_x: np.ndarray
    v_x: np.ndarray
    H: np.ndarray


@dataclass(frozen=True)
class FrameField:
    tangent: np.ndarray
    normal: np.ndarray
    curvature: np.ndarray
    speed: np.ndarray


def frame_field(fieldvals, backend=deriv.SPECTRAL):
    """Vectorized Frenet data for every node curve of the field."""
    c_th = deriv.periodic_derivative(fieldvals, backend, order=1, axis=2)
    c_thth = deriv.periodic_derivative(fieldvals, backend, order=2, axis=2)
    speed = np.linalg.norm(c_th, axis=3)
    if speed.min() < EPS_REG * speed.mean():
        raise RegularityError("a node curve degenerated (speed below floor)")
    tangent = c_th / speed[..., None]
    normal = quarter_turn(tangent)
    cross = c_th[..., 0] * c_thth[..., 1] - c_th[..., 1] * c_thth[..., 0]
    curvature = cross / speed**3
    return FrameField(tangent, normal, curvature, speed)


def _jets(field, frames, periodic_x=False):
    v = field.values
    if periodic_x:
        c_x = deriv.periodic_grid_derivative(v, 0, field.dx)
    else:
        c_x = deriv.grid_derivative(v, 0, field.dx)
    c_t = deriv.grid_derivative(v, 1, field.dt)
    v_x = np.einsum("ijkl,ijkl->ijk", c_x, frames.tangent)
    h_x = np.einsum("ijkl,ijkl->ijk", c_x, frames.normal)
    v_t = np.einsum("ijkl,ijkl->ijk", c_t, frames.tangent)
    h_t = np.einsum("ijkl,ijkl->ijk", c_t, frames.normal)
    return h_t, v_t, h_x, v_x


def jet_decompose(field, op, backend=deriv.SPECTRAL, periodic_x=False):
    """Frenet-frame jet components and energy density H of the field."""
    _check_op(field, op)
    frames = frame_field(field.values, backend)
    h_t, v_t, h_x, v_x = _jets(field, frames, periodic_x)
    H = 0.5 * (h_x * op.apply(h_x) + h_t * op.apply(h_t))
    return JetDecomposition(h_t=h_t, v_t=v_t, h_x=h_x, v_x=v_x, H=H)


def _check_op(field, op):
    if op.n != field.n_theta:
        raise ValueError("operator size does not match field N")


def _interior_divergence(fx, ft, dx, dt, periodic_x=False):
    """d_x fx + d_t ft by central differences; zero on Dirichlet edges."""
    out = np.zeros_like(fx)
    if periodic_x:
        dxf = (np.roll(fx[:-1], -1, axis=0) - np.roll(fx[:-1], 1, axis=0)) / (2 * dx)
        dxf = np.concatenate([dxf, dxf[:1]], axis=0)
        out[:, 1:-1] = dxf[:, 1:-1]
        out[:, 1:-1] += (ft[:, 2:] - ft[:, :-2]) / (2 * dt)
    else:
        out[1:-1, 1:-1] = (fx[2:, 1:-1] - fx[:-2, 1:-1]) / (2 * dx)
        out[1:-1, 1:-1] += (ft[1:-1, 2:] - ft[1:-1, :-2]) / (2 * dt)
    return out


def _interior_mask(shape, periodic_x=False):
    mask = np.zeros(shape, dtype=bool)
    if periodic_x:
        mask[:, 1:-1] = True
    else:
        mask[1:-1, 1:-1] = True
    return mask


def residual_horizontal(
    field, decomp, op, backend=deriv.SPECTRAL, frames=None, periodic_x=False
):
    """Residual of the horizontal field equation, zero-filled on edges."""
    _check_op(field, op)
    if frames is None:
        frames = frame_field(field.values, backend)
    div = _interior_divergence(
        op.apply(decomp.h_x), op.apply(decomp.h_t), field.dx, field.dt, periodic_x
    )
    transport = decomp.h_x * op.apply(decomp.v_x) + decomp.h_t * op.apply(decomp.v_t)
    d_theta = deriv.periodic_derivative(transport, backend, order=1, axis=2)
    d_theta /= frames.speed
    r = div - d_theta + frames.curvature * decomp.H
    mask = _interior_mask(r.shape[:2], periodic_x)
    r[~mask] = 0.0
    return r


def residual_vertical(field, decomp, op, force=ZERO_FORCE, periodic_x=False):
    """Residual of the vertical (conservation-law) equation."""
    _check_op(field, op)
    div = _interior_divergence(
        op.apply(decomp.v_x), op.apply(decomp.v_t), field.dx, field.dt, periodic_x
    )
    r = div - force.evaluate(field.n_theta)[None, None, :]
    mask = _interior_mask(r.shape[:2], periodic_x)
    r[~mask] = 0.0
    return r


def residual_metric(r_h, r_v, periodic_x=False):
    """Max over grid nodes of the per-node RMS of the stacked residuals."""
    rms = np.sqrt(0.5 * (np.mean(r_h**2, axis=2) + np.mean(r_v**2, axis=2)))
    return float(rms.max())


# ---------------------------------------------------------------------------
# energy


def energy(field, op, backend=deriv.SPECTRAL, periodic_x=False):
    """(E_total, E_h, E_v): trapezoidal (x, t) quadrature of the split
    Lagrangian densities."""
    _check_op(field, op)
    frames = frame_field(field.values, backend)
    h_t, v_t, h_x, v_x = _jets(field, frames, periodic_x)
    w = 2.0 * np.pi / field.n_theta

    def density(a, b):
        integrand = a * op.apply(a) + b * op.apply(b)
        return 0.5 * np.sum(integrand * frames.speed, axis=2) * w

    e_h = density(h_t, h_x)
    e_v = density(v_t, v_x)
    x = np.arange(field.m_x + 1) / field.m_x
    t = np.arange(field.m_t + 1) / field.m_t

    def quad(grid):
        return float(np.trapezoid(np.trapezoid(grid, t, axis=1), x, axis=0))

    eh, ev = quad(e_h), quad(e_v)
    return eh + ev, eh, ev


# ---------------------------------------------------------------------------
# boundary-value solver


@dataclass(frozen=True)
class SolverConfig:
    tol_res: float = 1e-8
    max_iter: int = 30  # Newton iterations
    max_halvings: int = 12  # step-halving backtracks per iteration
    krylov_tol: float = 1e-4
    krylov_restart: int = 400
    krylov_maxiter: int = 2
    backend: str = deriv.SPECTRAL
    periodic_x: bool = False
    record_energy: bool = False


@dataclass
class ConvergenceReport:
    iterations: int
    residual: float
    converged: bool
    halvings: int
    residual_history: list = field(default_factory=list)
    energy_history: list = field(default_factory=list)


def _assemble(values, field_dx, field_dt, op, force_values, backend, periodic_x):
    frames = frame_field(values, backend)
    n = values.shape[2]

    if periodic_x:
        c_x = deriv.periodic_grid_derivative(values, 0, field_dx)
    else:
        c_x = deriv.grid_derivative(values, 0, field_dx)
    c_t = deriv.grid_derivative(values, 1, field_dt)
    v_x = np.einsum("ijkl,ijkl->ijk", c_x, frames.tangent)
    h_x = np.einsum("ijkl,ijkl->ijk", c_x, frames.normal)
    v_t = np.einsum("ijkl,ijkl->ijk", c_t, frames.tangent)
    h_t = np.einsum("ijkl,ijkl->ijk", c_t, frames.normal)

    ph_x, ph_t = op.apply(h_x), op.apply(h_t)
    pv_x, pv_t = op.apply(v_x), op.apply(v_t)
    H = 0.5 * (h_x * ph_x + h_t * ph_t)

    div_h = _interior_divergence(ph_x, ph_t, field_dx, field_dt, periodic_x)
    transport = h_x * pv_x + h_t * pv_t
    d_theta = deriv.periodic_derivative(transport, backend, order=1, axis=2)
    d_theta /= frames.speed
    r_h = div_h - d_theta + frames.curvature * H

    div_v = _interior_divergence(pv_x, pv_t, field_dx, field_dt, periodic_x)
    r_v = div_v - force_values[None, None, :]

    mask = _interior_mask(values.shape[:2], periodic_x)
    r_h[~mask] = 0.0
    r_v[~mask] = 0.0
    return r_h, r_v, frames, mask


def _full_difference(m, d):
    """(m+1)-point first derivative: central interior, one-sided edges."""
    mat = np.zeros((m + 1, m + 1))
    for j in range(1, m):
        mat[j, j - 1] = -0.5 / d
        mat[j, j + 1] = 0.5 / d
    mat[0, 0], mat[0, 1], mat[0, 2] = -1.5 / d, 2.0 / d, -0.5 / d
    mat[m, m], mat[m, m - 1], mat[m, m - 2] = 1.5 / d, -2.0 / d, 0.5 / d
    return mat


def _periodic_difference(m, d):
    """m-point central first derivative with wraparound."""
    mat = np.zeros((m, m))
    for j in range(m):
        mat[j, (j - 1) % m] = -0.5 / d
        mat[j, (j + 1) % m] = 0.5 / d
    return mat


def _grid_matrices(m_x, m_t, dx, dt, periodic_x):
    """Sparse 1D building blocks of the linearized residual operator.

    Works on the full grid (duplicate x row excluded when periodic);
    DIVX/DIVT take full-grid data to the unknown rows, RINT restricts,
    E zero-pads unknown data back to the full grid.
    """
    dt_t = sparse.csr_matrix(_full_difference(m_t, dt))
    div_t = sparse.csr_matrix(_full_difference(m_t, dt)[1:-1])
    r_t = sparse.eye(m_t + 1, format="csr")[1:-1]
    if periodic_x:
        dt_x = sparse.csr_matrix(_periodic_difference(m_x, dx))
        div_x = dt_x
        r_x = sparse.eye(m_x, format="csr")
    else:
        dt_x = sparse.csr_matrix(_full_difference(m_x, dx))
        div_x = sparse.csr_matrix(_full_difference(m_x, dx)[1:-1])
        r_x = sparse.eye(m_x + 1, format="csr")[1:-1]
    ix = sparse.eye(dt_x.shape[0], format="csr")
    it = sparse.eye(m_t + 1, format="csr")
    ops = {
        "DX": sparse.kron(dt_x, it).tocsr(),
        "DT": sparse.kron(ix, dt_t).tocsr(),
        "DIVX": sparse.kron(div_x, r_t).tocsr(),
        "DIVT": sparse.kron(r_x, div_t).tocsr(),
        "RINT": sparse.kron(r_x, r_t).tocsr(),
    }
    ops["E"] = ops["RINT"].T.tocsr()
    return ops


def _frozen_blocks(values, frames, op, dx, dt, periodic_x):
    """Per-theta-mode inverses of the frozen-coefficient linearization.

    Coefficients (speed, curvature, jet components) are averaged over
    theta at each grid node, which makes the linearized residual
    block-diagonal over theta-Fourier modes m; each block couples the
    normal/tangential displacement amplitudes over the whole (x, t)
    grid and is assembled from the exact discrete derivative stencils.
    Returns a callable mapping stacked residuals to a displacement step.
    """
    m_x = values.shape[0] - 1
    m_t = values.shape[1] - 1
    n = values.shape[2]
    grid = _grid_matrices(m_x, m_t, dx, dt, periodic_x)
    DX, DT = grid["DX"], grid["DT"]
    DIVX, DIVT = grid["DIVX"], grid["DIVT"]
    RINT, E = grid["RINT"], grid["E"]

    if periodic_x:
        c_x = deriv.periodic_grid_derivative(values, 0, dx)
    else:
        c_x = deriv.grid_derivative(values, 0, dx)
    c_t = deriv.grid_derivative(values, 1, dt)
    sl = slice(0, m_x) if periodic_x else slice(0, m_x + 1)

    def mean_coef(a):
        return a[sl].mean(axis=2).ravel()

    s = mean_coef(frames.speed)
    kap = mean_coef(frames.curvature)
    hx0 = mean_coef(np.einsum("ijkl,ijkl->ijk", c_x, frames.normal))
    vx0 = mean_coef(np.einsum("ijkl,ijkl->ijk", c_x, frames.tangent))
    ht0 = mean_coef(np.einsum("ijkl,ijkl->ijk", c_t, frames.normal))
    vt0 = mean_coef(np.einsum("ijkl,ijkl->ijk", c_t, frames.tangent))
    h0 = 0.5 * (hx0**2 + ht0**2)
    dg = sparse.diags
    dsi, dk = dg(1.0 / s), dg(kap)
    dhx, dvx, dht, dvt = dg(hx0), dg(vx0), dg(ht0), dg(vt0)

    n_unknown = RINT.shape[0]
    modes = np.arange(n // 2 + 1)
    blocks = np.empty((len(modes), 2 * n_unknown, 2 * n_unknown), dtype=complex)
    dxe, dte = DX @ E, DT @ E
    for m in modes:
        pm = 1.0 + op.A**2 * m * m
        # spectral first derivatives annihilate the Nyquist mode
        im = 0.0 if 2 * m == n else 1j * m
        # frame tilt under the displacement a*n + b*t (mode m in theta)
        phi_a = im * (dsi @ E)
        phi_b = dk @ E
        jhx_a, jhx_b = dxe - dvx @ phi_a, -dvx @ phi_b
        jvx_a, jvx_b = dhx @ phi_a, dxe + dhx @ phi_b
        jht_a, jht_b = dte - dvt @ phi_a, -dvt @ phi_b
        jvt_a, jvt_b = dht @ phi_a, dte + dht @ phi_b
        dh_a = pm * (dhx @ jhx_a + dht @ jht_a)
        dh_b = pm * (dhx @ jhx_b + dht @ jht_b)
        dgt_a = pm * (dhx @ jvx_a + dvx @ jhx_a + dht @ jvt_a + dvt @ jht_a)
        dgt_b = pm * (dhx @ jvx_b + dvx @ jhx_b + dht @ jvt_b + dvt @ jht_b)
        rh_a = (
            pm * (DIVX @ jhx_a + DIVT @ jht_a)
            - im * (RINT @ (dsi @ dgt_a))
            + (1.0 - m * m) * (RINT @ (dg(h0 * kap**2) @ E))
            + RINT @ (dk @ dh_a)
        )
        rh_b = (
            pm * (DIVX @ jhx_b + DIVT @ jht_b)
            - im * (RINT @ (dsi @ dgt_b))
            + RINT @ (dk @ dh_b)
        )
        rv_a = pm * (DIVX @ jvx_a + DIVT @ jvt_a)
        rv_b = pm * (DIVX @ jvx_b + DIVT @ jvt_b)
        blocks[m, :n_unknown, :n_unknown] = _dense(rh_a)
        blocks[m, :n_unknown, n_unknown:] = _dense(rh_b)
        blocks[m, n_unknown:, :n_unknown] = _dense(rv_a)
        blocks[m, n_unknown:, n_unknown:] = _dense(rv_b)
    return np.linalg.inv(blocks)


def _dense(a):
    return np.asarray(a.todense()) if sparse.issparse(a) else np.asarray(a)


def solve_bvp(boundary, op, force=ZERO_FORCE, cfg=SolverConfig()):
    """Solve the Dirichlet problem for the coupled field equations.

    boundary: a CurveField whose edge ring holds the Dirichlet data;
    interior entries are ignored and re-initialized by Coons blending.
    Returns (CurveField, ConvergenceReport).

    Method: inexact Newton. The step is first taken against the
    frozen-coefficient mode-block Jacobian (exact when coefficients are
    uniform in theta, as for concentric data); when that step contracts
    the residual poorly the Newton system is re-solved with LGMRES and
    a matrix-free central-difference Jacobian, preconditioned by the
    same blocks. Steps are halved until the residual metric decreases.
    """
    _check_op(boundary, op)
    values = coons_fill(boundary.values)
    m_x, m_t, n = boundary.m_x, boundary.m_t, boundary.n_theta
    dx, dt = boundary.dx, boundary.dt
    force_values = force.evaluate(n)
    periodic = cfg.periodic_x
    xs = slice(0, m_x) if periodic else slice(1, m_x)
    u_shape = (m_x if periodic else m_x - 1, m_t - 1, n, 2)
    dim = int(np.prod(u_shape))
    n_unknown = u_shape[0] * u_shape[1]

    def assemble(vals):
        r_h, r_v, frames, mask = _assemble(
            vals, dx, dt, op, force_values, cfg.backend, periodic
        )
        return r_h, r_v, frames

    def set_interior(vals, interior):
        vals[xs, 1:-1] = interior
        if periodic:
            vals[m_x] = vals[0]
        return vals

    r_h, r_v, frames = assemble(values)
    metric = residual_metric(r_h, r_v)
    report = ConvergenceReport(
        iterations=0, residual=metric, converged=metric < cfg.tol_res,
        halvings=0, residual_history=[metric],
    )
    if cfg.record_energy:
        report.energy_history.append(energy(CurveField(values), op, cfg.backend)[0])
    if report.converged:
        return CurveField(values), report

    for it in range(1, cfg.max_iter + 1):
        inv_blocks = _frozen_blocks(values, frames, op, dx, dt, periodic)
        normal = frames.normal[xs, 1:-1]
        tangent = frames.tangent[xs, 1:-1]

        def precondition(r):
            r = r.reshape(u_shape[:3] + (2,))
            rh = np.fft.rfft(r[..., 0], axis=2).reshape(n_unknown, -1)
            rv = np.fft.rfft(r[..., 1], axis=2).reshape(n_unknown, -1)
            rhs = np.concatenate([rh, rv], axis=0).T
            sol = np.einsum("mij,mj->mi", inv_blocks, rhs)
            half = (u_shape[0], u_shape[1], n // 2 + 1)
            a = np.fft.irfft(sol[:, :n_unknown].T.reshape(half), n=n, axis=2)
            b = np.fft.irfft(sol[:, n_unknown:].T.reshape(half), n=n, axis=2)
            return (a[..., None] * normal + b[..., None] * tangent).ravel()

        f0 = np.stack([r_h[xs, 1:-1], r_v[xs, 1:-1]], axis=-1)
        ref = values
        scale = max(float(np.sqrt((ref[xs, 1:-1] ** 2).mean())), 1.0)

        def jacobian_vector(u):
            u = u.reshape(u_shape)
            eps = 1e-5 * scale / max(float(np.sqrt((u * u).mean())), 1e-300)
            rp_h, rp_v, _ = assemble(set_interior(ref.copy(), ref[xs, 1:-1] + eps * u))
            rm_h, rm_v, _ = assemble(set_interior(ref.copy(), ref[xs, 1:-1] - eps * u))
            dr = np.stack(
                [(rp_h - rm_h)[xs, 1:-1], (rp_v - rm_v)[xs, 1:-1]], axis=-1
            )
            return (dr / (2.0 * eps)).ravel()

        def backtrack(step):
            alpha = 1.0
            for _ in range(cfg.max_halvings + 1):
                trial = set_interior(values.copy(), values[xs, 1:-1] + alpha * step)
                try:
                    t_h, t_v, t_frames = assemble(trial)
                    t_metric = residual_metric(t_h, t_v)
                except RegularityError:
                    t_metric = np.inf
                if np.isfinite(t_metric) and (
                    t_metric < metric or t_metric < cfg.tol_res
                ):
                    return trial, t_h, t_v, t_frames, t_metric
                alpha *= 0.5
                report.halvings += 1
            return None

        # frozen-Jacobian step first; cheap and exact for concentric data
        step = precondition(-f0.ravel()).reshape(u_shape)
        outcome = backtrack(step)
        if outcome is None or outcome[4] > 0.25 * metric:
            step, _ = gmres(
                LinearOperator((dim, dim), matvec=jacobian_vector),
                -f0.ravel(),
                M=LinearOperator((dim, dim), matvec=precondition),
                rtol=cfg.krylov_tol,
                restart=min(cfg.krylov_restart, dim),
                maxiter=cfg.krylov_maxiter,
            )
            refined = backtrack(step.reshape(u_shape))
            if refined is not None and (
                outcome is None or refined[4] < outcome[4]
            ):
                outcome = refined
        if outcome is None:
            raise NonConvergence(
                f"residual stagnated at {metric:.3e} after {it} iterations",
                iterations=it, residual=metric,
            )
        trial, r_h_n, r_v_n, frames_n, new_metric = outcome
        values, r_h, r_v, frames, metric = trial, r_h_n, r_v_n, frames_n, new_metric
        report.iterations = it
        report.residual = metric
        report.residual_history.append(metric)
        if cfg.record_energy:
            report.energy_history.append(
                energy(CurveField(values), op, cfg.backend)[0]
            )
        if metric < cfg.tol_res:
            report.converged = True
            return CurveField(values), report
    raise NonConvergence(
        f"no convergence within {cfg.max_iter} iterations (residual {metric:.3e})",
        iterations=cfg.max_iter, residual=metric,
    )


def equivariance_check(boundary, phi, op, force=ZERO_FORCE, cfg=SolverConfig()):
    """Numerical witness that solutions descend to shape space.

    Solves the problem twice, once with every boundary curve
    reparametrized by phi, and returns the max over grid nodes of the
    shape distance between the two solutions.
    """
    sol_a, _ = solve_bvp(boundary, op, force, cfg)
    vals = boundary.values.copy()
    m_x, m_t = boundary.m_x, boundary.m_t
    for i in range(m_x + 1):
        for j in range(m_t + 1):
            if i in (0, m_x) or j in (0, m_t):
                vals[i, j] = reparametrize(boundary.curve_at(i, j), phi).samples
    sol_b, _ = solve_bvp(CurveField(vals), op, force, cfg)
    worst = 0.0
    for i in range(m_x + 1):
        for j in range(m_t + 1):
            worst = max(worst, shape_distance(sol_a.curve_at(i, j), sol_b.curve_at(i, j)))
    return worst
