"""Periodic differentiation and interpolation on uniform grids.

Everything here works on the uniform parameter grid theta_j = 2*pi*j/n.
Two backends are provided throughout the package: "spectral" (discrete
Fourier differentiation, spectrally accurate on analytic data) and
"difference" (2nd-order central stencils, used for robustness checks).
"""

import numpy as np
from scipy.fft import fft, ifft, rfft, irfft

SPECTRAL = "spectral"
DIFFERENCE = "difference"
BACKENDS = (SPECTRAL, DIFFERENCE)

TWO_PI = 2.0 * np.pi


def _wavenumbers(n):
    k = np.fft.fftfreq(n, d=1.0 / n)
    return k


def fourier_derivative(f, order=1, axis=-1):
    """Spectral derivative of a 2*pi-periodic sampled function.

    Odd-order derivatives zero the Nyquist mode (the only consistent
    choice for real data on an even grid).
    """
    f = np.asarray(f, dtype=float)
    n = f.shape[axis]
    k = _wavenumbers(n)
    mult = (1j * k) ** order
    if order % 2 == 1 and n % 2 == 0:
        mult[n // 2] = 0.0
    shape = [1] * f.ndim
    shape[axis] = n
    out = ifft(fft(f, axis=axis) * mult.reshape(shape), axis=axis)
    return out.real


def central_derivative(f, order=1, axis=-1):
    """2nd-order central difference derivative on the periodic grid."""
    f = np.asarray(f, dtype=float)
    n = f.shape[axis]
    h = TWO_PI / n
    if order == 1:
        return (np.roll(f, -1, axis=axis) - np.roll(f, 1, axis=axis)) / (2.0 * h)
    if order == 2:
        return (
            np.roll(f, -1, axis=axis) - 2.0 * f + np.roll(f, 1, axis=axis)
        ) / h**2
    raise ValueError(f"unsupported difference order {order}")


def periodic_derivative(f, backend, order=1, axis=-1):
    if backend == SPECTRAL:
        return fourier_derivative(f, order=order, axis=axis)
    if backend == DIFFERENCE:
        return central_derivative(f, order=order, axis=axis)
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")


def fourier_antiderivative(f, axis=-1):
    """Antiderivative of a periodic function, vanishing at theta = 0.

    Returns (mean, periodic_part) so that the full antiderivative is
    mean * theta + periodic_part(theta); the periodic part is produced
    on the same grid as the input.
    """
    f = np.asarray(f, dtype=float)
    n = f.shape[axis]
    coeffs = fft(f, axis=axis)
    k = _wavenumbers(n)
    div = np.where(k == 0, 1.0, 1j * k)
    shape = [1] * f.ndim
    shape[axis] = n
    prim = coeffs / div.reshape(shape)
    idx = [slice(None)] * f.ndim
    idx[axis] = slice(0, 1)
    mean = coeffs[tuple(idx)].real / n
    prim[tuple(idx)] = 0.0
    if n % 2 == 0:
        # Nyquist mode has no periodic antiderivative representable on
        # the grid; drop it (it is below tolerance for resolved data).
        idx[axis] = slice(n // 2, n // 2 + 1)
        prim[tuple(idx)] = 0.0
    periodic = ifft(prim, axis=axis).real
    periodic = periodic - np.take(periodic, [0], axis=axis)
    return np.squeeze(mean, axis=axis % f.ndim), periodic


def fourier_evaluate(f, theta):
    """Evaluate the trigonometric interpolant of periodic samples.

    f has shape (n, ...) sampled on theta_j = 2*pi*j/n; theta is an
    arbitrary array of evaluation points. Returns shape theta.shape + f.shape[1:].
    """
    f = np.asarray(f, dtype=float)
    n = f.shape[0]
    theta = np.asarray(theta, dtype=float)
    coeffs = fft(f, axis=0) / n
    k = _wavenumbers(n)
    if n % 2 == 0:
        # Split the Nyquist coefficient into +/- n/2 halves so the
        # interpolant is real with zero imaginary derivative there.
        cny = coeffs[n // 2].copy()
        coeffs[n // 2] = 0.5 * cny
        k = np.concatenate([k, [n // 2]])
        coeffs = np.concatenate([coeffs, (0.5 * cny)[None]], axis=0)
        # last entry uses +n/2; pair it with the existing -n/2 slot
        k[n // 2] = -(n // 2)
    phases = np.exp(1j * np.multiply.outer(theta, k))
    return np.tensordot(phases, coeffs, axes=([theta.ndim], [0])).real


def fourier_refine(f, factor, axis=0):
    """Resample periodic data onto a factor-times-finer uniform grid."""
    f = np.asarray(f, dtype=float)
    n = f.shape[axis]
    m = n * factor
    spec = rfft(f, axis=axis)
    if n % 2 == 0 and m > n:
        # Original Nyquist bin becomes an interior frequency: halve it
        # so the +/- n/2 pair carries the right total amplitude.
        idx = [slice(None)] * f.ndim
        idx[axis] = slice(n // 2, n // 2 + 1)
        spec[tuple(idx)] *= 0.5
    pad = [(0, 0)] * f.ndim
    pad[axis] = (0, m // 2 + 1 - spec.shape[axis])
    spec = np.pad(spec, pad)
    return irfft(spec, n=m, axis=axis) * (m / n)


def grid_derivative(f, axis, spacing):
    """2nd-order derivative on a non-periodic uniform grid.

    Central differences in the interior, one-sided 2nd-order stencils
    at the two edge slices.
    """
    f = np.asarray(f, dtype=float)
    out = np.empty_like(f)
    fm = np.moveaxis(f, axis, 0)
    om = np.moveaxis(out, axis, 0)
    om[1:-1] = (fm[2:] - fm[:-2]) / (2.0 * spacing)
    om[0] = (-3.0 * fm[0] + 4.0 * fm[1] - fm[2]) / (2.0 * spacing)
    om[-1] = (3.0 * fm[-1] - 4.0 * fm[-2] + fm[-3]) / (2.0 * spacing)
    return out


def periodic_grid_derivative(f, axis, spacing):
    """Central derivative with periodic wrap on a uniform grid where
    f[0] and f[-1] are the two distinct endpoints of one period cell."""
    f = np.asarray(f, dtype=float)
    fm = np.moveaxis(f, axis, 0)
    n = fm.shape[0] - 1
    core = fm[:-1]
    d = (np.roll(core, -1, axis=0) - np.roll(core, 1, axis=0)) / (2.0 * spacing)
    out = np.concatenate([d, d[:1]], axis=0)
    return np.moveaxis(out, 0, axis)
