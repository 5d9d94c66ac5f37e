"""Declarative experiment runner.

Parses a JSON run configuration, dispatches to the solver modules, and
writes a reproducible artifact directory: manifest.json (full config
echo, library versions, result numbers, timings), CSV snapshots at the
configured stride, and one plotdata CSV per run with columns suited to
line plots. All outputs except the timings field are deterministic:
identical configs produce byte-identical CSV/JSON artifacts.

Exit codes: 0 success, 1 failed self-checks, 2 invalid configuration,
3 solver non-convergence (artifacts are still written), 4 numerical
failure (degeneracy, drift, non-flatness, singular collapse where the
run did not ask to tolerate it).
"""

import argparse
import csv
import json
import os
import sys
import time
from importlib import metadata

import numpy as np
import scipy

from . import deriv, shapes
from . import hopf as hopf_mod
from . import hypflow
from . import sigma as sigma_mod
from .curvegeo import frenet, write_curve_csv
from .errors import ConfigError, NonConvergence, UnredError
from .forcing import KINDS as FORCE_KINDS
from .forcing import ForceProfile
from .sobolev import SPECTRAL, TRIDIAGONAL, SobolevOperator
from .unreduction import (
    CurveField,
    SolverConfig,
    circle_to_circle_boundary,
    jet_decompose,
    residual_vertical,
    solve_bvp,
)

COMMANDS = ("match", "flow", "hopf", "sigma", "check")

FLOW_SHAPES = ("circle", "ellipse", "rounded_square")
HOPF_PROFILES = ("constant", "sine_offset")
MATCH_BOUNDARIES = ("circle_to_circle",)


# ---------------------------------------------------------------------------
# configuration loading and validation


def load_config(path):
    """Parse a JSON run config; malformed files raise ConfigError."""
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    return cfg


def _num(cfg, section, key, default, diags, low=None, strict_low=False):
    value = cfg.get(section, {}).get(key, default)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        diags.append(f"{section}.{key} must be a number")
        return default
    if low is not None:
        if strict_low and value <= low:
            diags.append(f"{section}.{key} must be > {low}")
        elif not strict_low and value < low:
            diags.append(f"{section}.{key} must be >= {low}")
    return value


def _even_size(cfg, section, key, default, diags):
    value = cfg.get(section, {}).get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        diags.append(f"{section}.{key} must be an integer")
        return default
    if value < 8 or value % 2:
        diags.append(f"{section}.{key} must be even and at least 8")
    return value


def _int_min(cfg, section, key, default, low, diags):
    value = cfg.get(section, {}).get(key, default)
    if not isinstance(value, int) or isinstance(value, bool):
        diags.append(f"{section}.{key} must be an integer")
        return default
    if value < low:
        diags.append(f"{section}.{key} must be >= {low}")
    return value


def _choice(cfg, section, key, default, allowed, diags):
    value = cfg.get(section, {}).get(key, default)
    if value not in allowed:
        diags.append(f"{section}.{key} must be one of {list(allowed)}")
        return default
    return value


def _vector(cfg, section, key, length, default, diags):
    value = cfg.get(section, {}).get(key, default)
    if (
        not isinstance(value, (list, tuple))
        or len(value) != length
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        diags.append(f"{section}.{key} must be a list of {length} numbers")
        return default
    return [float(v) for v in value]


def validate_config(cfg, command):
    """Collect every schema violation at once (not fail-fast)."""
    diags = []
    declared = cfg.get("command")
    if declared is not None and declared != command:
        diags.append(
            f"config declares command {declared!r} but {command!r} was requested"
        )
    for section in cfg:
        if section not in (
            "command", "geometry", "operator", "force", "solver", "output",
        ):
            diags.append(f"unknown config section {section!r}")

    _num(cfg, "operator", "A", 1.0, diags, low=0.0)
    _choice(cfg, "operator", "backend", deriv.SPECTRAL, deriv.BACKENDS, diags)

    kind = _choice(cfg, "force", "kind", "zero", FORCE_KINDS, diags)
    _num(cfg, "force", "amplitude", 0.0, diags)
    freq = cfg.get("force", {}).get("frequency", 1)
    if kind == "sinusoidal" and (not isinstance(freq, int) or isinstance(freq, bool)):
        diags.append("force.frequency must be an integer wavenumber")

    _num(cfg, "solver", "tol_res", 1e-8, diags, low=0.0, strict_low=True)
    _int_min(cfg, "solver", "max_iter", 30, 1, diags)
    for key in cfg.get("solver", {}):
        if key not in ("tol_res", "max_iter"):
            diags.append(f"unknown solver option {key!r}")

    _int_min(cfg, "output", "stride", 1, 1, diags)
    directory = cfg.get("output", {}).get("directory")
    if directory is not None and not isinstance(directory, str):
        diags.append("output.directory must be a string path")

    if command == "match":
        _choice(cfg, "geometry", "boundary", "circle_to_circle", MATCH_BOUNDARIES, diags)
        _even_size(cfg, "geometry", "n", 64, diags)
        _int_min(cfg, "geometry", "m_x", 8, 2, diags)
        _int_min(cfg, "geometry", "m_t", 8, 2, diags)
        _num(cfg, "geometry", "r0", 1.0, diags, low=0.0, strict_low=True)
        _num(cfg, "geometry", "r1", 2.0, diags, low=0.0, strict_low=True)
        amp = _num(cfg, "geometry", "reparam_amplitude", 0.0, diags)
        if isinstance(amp, (int, float)) and abs(amp) >= 1.0:
            diags.append(
                "geometry.reparam_amplitude must have magnitude < 1 "
                "(otherwise theta + a*sin(theta) is not a diffeomorphism)"
            )
    elif command == "flow":
        shape = _choice(cfg, "geometry", "shape", "circle", FLOW_SHAPES, diags)
        _even_size(cfg, "geometry", "n", 256, diags)
        if shape == "circle":
            _num(cfg, "geometry", "radius", 1.0, diags, low=0.0, strict_low=True)
        elif shape == "ellipse":
            _num(cfg, "geometry", "a", 2.0, diags, low=0.0, strict_low=True)
            _num(cfg, "geometry", "b", 1.0, diags, low=0.0, strict_low=True)
        else:
            _num(cfg, "geometry", "half_width", 1.0, diags, low=0.0, strict_low=True)
        _num(cfg, "geometry", "h0", 0.0, diags)
        _num(cfg, "geometry", "T", 0.5, diags, low=0.0, strict_low=True)
        _num(cfg, "geometry", "dt", 1e-3, diags, low=0.0, strict_low=True)
    elif command == "hopf":
        _even_size(cfg, "geometry", "k", 2048, diags)
        profile = _choice(cfg, "geometry", "profile", "constant", HOPF_PROFILES, diags)
        _num(cfg, "geometry", "value", 0.0, diags)
        if profile == "sine_offset":
            _num(cfg, "geometry", "amplitude", 1.0, diags)
            _num(cfg, "geometry", "offset", 0.0, diags)
    elif command == "sigma":
        _int_min(cfg, "geometry", "m_x", 16, 2, diags)
        _int_min(cfg, "geometry", "m_t", 16, 2, diags)
        _vector(cfg, "geometry", "sigma_t", 3, [0.0, 0.0, 0.0], diags)
        _vector(cfg, "geometry", "sigma_x", 3, [0.0, 0.0, 0.0], diags)
        reconstruct = cfg.get("geometry", {}).get("reconstruct", True)
        if not isinstance(reconstruct, bool):
            diags.append("geometry.reconstruct must be a boolean")
    elif command == "check":
        pass
    else:
        diags.append(f"command must be one of {list(COMMANDS)}")
    return diags


# ---------------------------------------------------------------------------
# artifact writers


def _write_plotdata(outdir, header, rows):
    path = os.path.join(outdir, "plotdata.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(v)) for v in row])


def _write_manifest(outdir, command, cfg, results, timings):
    manifest = {
        "command": command,
        "config": cfg,
        "versions": {
            "python": sys.version.split()[0],
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "unred": _package_version(),
        },
        "results": results,
        "timings": timings,
    }
    with open(os.path.join(outdir, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _package_version():
    try:
        return metadata.version("unred")
    except metadata.PackageNotFoundError:
        return "unknown"


def _operator(cfg, n):
    op_cfg = cfg.get("operator", {})
    backend = op_cfg.get("backend", deriv.SPECTRAL)
    return SobolevOperator(
        A=float(op_cfg.get("A", 1.0)),
        n=n,
        # the metric operator's stencil backend matching "difference"
        backend=SPECTRAL if backend == deriv.SPECTRAL else TRIDIAGONAL,
    )


def _force(cfg):
    f = cfg.get("force", {})
    return ForceProfile(
        kind=f.get("kind", "zero"),
        amplitude=float(f.get("amplitude", 0.0)),
        frequency=int(f.get("frequency", 1)),
    )


def _solver(cfg):
    s = cfg.get("solver", {})
    return SolverConfig(
        tol_res=float(s.get("tol_res", 1e-8)),
        max_iter=int(s.get("max_iter", 30)),
        backend=cfg.get("operator", {}).get("backend", deriv.SPECTRAL),
    )


# ---------------------------------------------------------------------------
# command implementations


def run_match(cfg, outdir):
    geo = cfg.get("geometry", {})
    n = int(geo.get("n", 64))
    m_x, m_t = int(geo.get("m_x", 8)), int(geo.get("m_t", 8))
    boundary = circle_to_circle_boundary(
        n, m_x, m_t, r0=float(geo.get("r0", 1.0)), r1=float(geo.get("r1", 2.0))
    )
    amp = float(geo.get("reparam_amplitude", 0.0))
    if amp != 0.0:
        phi = shapes.sine_reparam(amp)
        vals = boundary.values.copy()
        for i in range(m_x + 1):
            for j in range(m_t + 1):
                if i in (0, m_x) or j in (0, m_t):
                    vals[i, j] = shapes.reparametrize(
                        boundary.curve_at(i, j), phi
                    ).samples
        boundary = CurveField(vals)
    op = _operator(cfg, n)
    force = _force(cfg)
    stride = int(cfg.get("output", {}).get("stride", 1))

    start = time.perf_counter()
    try:
        solution, report = solve_bvp(boundary, op, force, _solver(cfg))
        failure = None
    except NonConvergence as exc:
        solution, report, failure = None, None, exc
    elapsed = time.perf_counter() - start

    if failure is None:
        decomp = jet_decompose(solution, op, cfg.get("operator", {}).get("backend", deriv.SPECTRAL))
        r_v = residual_vertical(solution, decomp, op, force)
        results = {
            "converged": report.converged,
            "iterations": report.iterations,
            "residual": report.residual,
            "max_residual_vertical": float(np.abs(r_v).max()),
        }
        for i in range(0, m_x + 1, stride):
            for j in range(0, m_t + 1, stride):
                write_curve_csv(
                    solution.curve_at(i, j),
                    os.path.join(outdir, f"curve_x{i:03d}_t{j:03d}.csv"),
                )
        history = report.residual_history
    else:
        results = {
            "converged": False,
            "iterations": failure.iterations,
            "residual": failure.residual,
            "error": str(failure),
        }
        history = []
    _write_plotdata(outdir, ["iteration", "residual"], list(enumerate(history)))
    _write_manifest(outdir, "match", cfg, results, {"solve_seconds": elapsed})
    if failure is not None:
        raise failure
    return results


def _flow_initial_curve(geo, n):
    shape = geo.get("shape", "circle")
    if shape == "circle":
        return shapes.circle(n, radius=float(geo.get("radius", 1.0)))
    if shape == "ellipse":
        return shapes.ellipse(n, a=float(geo.get("a", 2.0)), b=float(geo.get("b", 1.0)))
    return shapes.rounded_square(n, half_width=float(geo.get("half_width", 1.0)))


def run_flow(cfg, outdir):
    geo = cfg.get("geometry", {})
    n = int(geo.get("n", 256))
    curve = _flow_initial_curve(geo, n)
    h0 = np.full(n, float(geo.get("h0", 0.0)))
    state0 = hypflow.FlowState(curve, h0, np.zeros(n))
    stride = int(cfg.get("output", {}).get("stride", 1))
    backend = cfg.get("operator", {}).get("backend", deriv.SPECTRAL)

    start = time.perf_counter()
    traj = hypflow.integrate(
        state0,
        force=_force(cfg),
        T=float(geo.get("T", 0.5)),
        dt=float(geo.get("dt", 1e-3)),
        backend=backend,
        raise_on_singularity=False,
    )
    elapsed = time.perf_counter() - start

    rows = []
    for idx, state in enumerate(traj.states):
        fr = frenet(state.curve, backend)
        centroid = state.curve.samples.mean(axis=0)
        radius = float(
            np.linalg.norm(state.curve.samples - centroid, axis=1).mean()
        )
        rows.append(
            (
                state.time,
                radius,
                float(fr.curvature.max()),
                float(np.abs(state.h).max()),
                float(np.abs(state.v).max()),
            )
        )
        if idx % stride == 0 or idx == len(traj.states) - 1:
            write_curve_csv(
                state.curve, os.path.join(outdir, f"curve_{idx:06d}.csv")
            )
    _write_plotdata(
        outdir, ["time", "mean_radius", "max_curvature", "max_h", "max_v"], rows
    )
    final = traj.final
    results = {
        "stop_reason": traj.stop_reason,
        "final_time": final.time,
        "steps": len(traj.states) - 1,
        "final_mean_radius": rows[-1][1],
        "final_max_curvature": rows[-1][2],
        "max_abs_v": max(row[4] for row in rows),
    }
    _write_manifest(outdir, "flow", cfg, results, {"integrate_seconds": elapsed})
    return results


def _hopf_profile(geo, k):
    if geo.get("profile", "constant") == "constant":
        return hopf_mod.constant_profile(k, float(geo.get("value", 0.0)))
    amplitude = float(geo.get("amplitude", 1.0))
    offset = float(geo.get("offset", 0.0))
    th = 2.0 * np.pi * np.arange(k + 1) / k
    values = amplitude * np.sin(th) + offset
    values[-1] = values[0]
    return hopf_mod.VerticalProfile(values)


def run_hopf(cfg, outdir):
    geo = cfg.get("geometry", {})
    k = int(geo.get("k", 2048))
    ks = sorted({max(64, k // 4), max(64, k // 2), k})

    start = time.perf_counter()
    rows = []
    for kk in ks:
        result = hopf_mod.holonomy(hopf_mod.great_circle(kk), _hopf_profile(geo, kk))
        rows.append((kk, result.phase, result.closure_error))
    elapsed = time.perf_counter() - start

    _write_plotdata(outdir, ["k", "phase", "closure_error"], rows)
    results = {
        "k": k,
        "phase": rows[-1][1],
        "closure_error": rows[-1][2],
    }
    _write_manifest(outdir, "hopf", cfg, results, {"lift_seconds": elapsed})
    return results


def run_sigma(cfg, outdir):
    geo = cfg.get("geometry", {})
    field = sigma_mod.constant_lie_field(
        geo.get("sigma_t", [0.0, 0.0, 0.0]),
        geo.get("sigma_x", [0.0, 0.0, 0.0]),
        int(geo.get("m_x", 16)),
        int(geo.get("m_t", 16)),
    )
    start = time.perf_counter()
    ep = sigma_mod.ep_residual(field)
    flat = sigma_mod.flatness_residual(field)
    results = {
        "max_ep_residual": float(np.abs(ep).max()),
        "max_flatness_residual": float(np.abs(flat).max()),
    }
    rows = [
        (i, float(np.abs(ep[i]).max()), float(np.abs(flat[i]).max()))
        for i in range(field.m_x + 1)
    ]
    if geo.get("reconstruct", True):
        g0 = np.array([1.0, 0.0, 0.0, 0.0])
        grid = sigma_mod.reconstruct(field, g0)
        results["reconstructed"] = True
        with open(os.path.join(outdir, "reconstruction.csv"), "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["i", "j", "w", "x", "y", "z"])
            for i in range(grid.shape[0]):
                for j in range(grid.shape[1]):
                    writer.writerow(
                        [i, j] + [repr(float(v)) for v in grid[i, j]]
                    )
    elapsed = time.perf_counter() - start
    _write_plotdata(outdir, ["x_index", "max_ep", "max_flatness"], rows)
    _write_manifest(outdir, "sigma", cfg, results, {"sigma_seconds": elapsed})
    return results


# ---------------------------------------------------------------------------
# built-in verification suite


def _check_curvature():
    fr = frenet(shapes.circle(128, radius=2.0))
    err = float(np.abs(fr.curvature - 0.5).max())
    return err < 1e-10, f"circle curvature error {err:.2e}"


def _check_turning_number():
    fr = frenet(shapes.ellipse(256))
    total = float((fr.curvature * fr.speed).mean() * 2.0 * np.pi)
    err = abs(total - 2.0 * np.pi)
    return err < 1e-10, f"ellipse total curvature error {err:.2e}"


def _check_sobolev():
    n, a = 128, 0.7
    op = SobolevOperator(A=a, n=n)
    th = 2.0 * np.pi * np.arange(n) / n
    worst = 0.0
    for k in (1, 5, n // 4):
        f = np.sin(k * th)
        worst = max(worst, float(np.abs(op.apply(f) - (1 + a * a * k * k) * f).max()))
        worst = max(worst, float(np.abs(op.solve(op.apply(f)) - f).max()))
    return worst < 1e-10, f"spectrum/round-trip error {worst:.2e}"


def _check_holonomy():
    res = hopf_mod.holonomy(
        hopf_mod.great_circle(2048), hopf_mod.constant_profile(2048, 0.0)
    )
    err = abs(res.phase - np.pi)
    return err < 1e-6, f"great-circle phase error {err:.2e}"


def _check_cancellation():
    profile = hopf_mod.vertical_ode(np.cos, -0.5, k=2048)
    res = hopf_mod.holonomy(hopf_mod.great_circle(2048), profile)
    worst = max(abs(res.phase), res.closure_error)
    return worst < 1e-6, f"cancelled-holonomy phase/closure {worst:.2e}"


def _check_flow_oracle():
    n = 64
    state0 = hypflow.FlowState(shapes.circle(n), np.zeros(n), np.zeros(n))
    traj = hypflow.integrate(state0, T=0.05, dt=1e-3)
    r_ref, h_ref = hypflow.circle_reduction_oracle(1.0, 0.0, 0.05)
    final = traj.final
    radius = float(np.linalg.norm(final.curve.samples, axis=1).mean())
    err = max(
        abs(radius - r_ref),
        abs(float(final.h.mean()) - h_ref),
        float(np.abs(final.v).max()),
    )
    return err < 1e-8, f"circle-flow oracle error {err:.2e}"


def _check_constant_solution():
    boundary = circle_to_circle_boundary(32, 4, 4, r0=1.0, r1=1.0)
    op = SobolevOperator(A=0.5, n=32)
    _, report = solve_bvp(boundary, op)
    ok = report.converged and report.iterations == 0 and report.residual < 1e-12
    return ok, f"constant boundary residual {report.residual:.2e} in {report.iterations} iterations"


def _check_sigma_bracket():
    alpha, beta = 0.3, 0.7
    field = sigma_mod.constant_lie_field(
        alpha * sigma_mod.E3 + beta * sigma_mod.E1, np.zeros(3), 8, 8
    )
    res = sigma_mod.ep_residual(field)
    expected = 2.0 * alpha * beta * sigma_mod.E2
    err = float(np.abs(res[1:-1, 1:-1] - expected).max())
    return err < 1e-12, f"bracket residual error {err:.2e}"


def _check_reconstruction():
    xi = 0.4 * sigma_mod.E1
    field = sigma_mod.constant_lie_field(xi, xi, 12, 12)
    grid = sigma_mod.reconstruct(field, np.array([1.0, 0.0, 0.0, 0.0]))
    t = np.arange(13) / 12.0
    expected = hopf_mod.qexp(
        sigma_mod.lie_to_quaternion((t[:, None, None] + t[None, :, None]) * xi)
    )
    err = float(np.abs(grid - expected).max())
    return err < 1e-6, f"exp-field reconstruction error {err:.2e}"


CHECKS = (
    ("curve curvature", _check_curvature),
    ("turning number", _check_turning_number),
    ("sobolev spectrum", _check_sobolev),
    ("hopf holonomy", _check_holonomy),
    ("holonomy cancellation", _check_cancellation),
    ("flow circle oracle", _check_flow_oracle),
    ("constant-boundary solve", _check_constant_solution),
    ("sigma bracket", _check_sigma_bracket),
    ("flat reconstruction", _check_reconstruction),
)


def run_check(cfg, outdir):
    results = {}
    failures = []
    start = time.perf_counter()
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except UnredError as exc:
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results[name] = {"passed": ok, "detail": detail}
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        if not ok:
            failures.append(name)
    elapsed = time.perf_counter() - start
    if outdir is not None:
        _write_manifest(outdir, "check", cfg, results, {"check_seconds": elapsed})
    if failures:
        raise CheckFailure(failures)
    return results


class CheckFailure(Exception):
    def __init__(self, names):
        super().__init__("failed checks: " + ", ".join(names))
        self.names = names


RUNNERS = {
    "match": run_match,
    "flow": run_flow,
    "hopf": run_hopf,
    "sigma": run_sigma,
    "check": run_check,
}


# ---------------------------------------------------------------------------
# entry point


def _thread_limit():
    raw = os.environ.get("UNRED_THREADS")
    if raw is None:
        return None
    try:
        limit = int(raw)
    except ValueError:
        raise ConfigError(f"UNRED_THREADS must be an integer, got {raw!r}")
    if limit < 1:
        raise ConfigError("UNRED_THREADS must be >= 1")
    return limit


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="unred",
        description="Run curve-matching, flow, holonomy and sigma-model "
        "experiments from declarative JSON configs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS + ("validate",):
        p = sub.add_parser(name)
        if name == "check":
            p.add_argument("--config", default=None)
            p.add_argument("--out", default=None)
        else:
            p.add_argument("--config", required=True)
            if name != "validate":
                p.add_argument("--out", default=None)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        limit = _thread_limit()

        if args.command == "validate":
            cfg = load_config(args.config)
            command = cfg.get("command", "match")
            if command not in COMMANDS:
                print(f"command must be one of {list(COMMANDS)}", file=sys.stderr)
                return 2
            diags = validate_config(cfg, command)
            if diags:
                raise ConfigError(diags)
            print("config is valid")
            return 0

        cfg = {} if args.config is None else load_config(args.config)
        diags = validate_config(cfg, args.command)
        if diags:
            raise ConfigError(diags)

        outdir = args.out or cfg.get("output", {}).get("directory")
        if args.command != "check" and outdir is None:
            raise ConfigError("no output directory: set output.directory or --out")
        if outdir is not None:
            os.makedirs(outdir, exist_ok=True)

        runner = RUNNERS[args.command]
        if limit is not None:
            import threadpoolctl

            with threadpoolctl.threadpool_limits(limits=limit):
                runner(cfg, outdir)
        else:
            runner(cfg, outdir)
        return 0
    except ConfigError as exc:
        for diag in exc.diagnostics:
            print(f"config error: {diag}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"solver did not converge: {exc}", file=sys.stderr)
        return 3
    except CheckFailure as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (UnredError, FloatingPointError) as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
