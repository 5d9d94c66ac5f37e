"""Built-in curve fixtures used by the CLI and the test suite."""

import numpy as np

from .curvegeo import DiscreteCurve


def _grid(n):
    return 2.0 * np.pi * np.arange(n) / n


def circle(n, radius=1.0, center=(0.0, 0.0)):
    th = _grid(n)
    pts = np.stack(
        [center[0] + radius * np.cos(th), center[1] + radius * np.sin(th)], axis=1
    )
    return DiscreteCurve(pts)


def ellipse(n, a=2.0, b=1.0, center=(0.0, 0.0)):
    th = _grid(n)
    pts = np.stack([center[0] + a * np.cos(th), center[1] + b * np.sin(th)], axis=1)
    return DiscreteCurve(pts)


def rounded_square(n, half_width=1.0, power=4):
    """Smooth convex curve interpolating between circle and square.

    Superellipse r(theta) = w / (cos^p + sin^p)^(1/p); analytic for even p.
    """
    th = _grid(n)
    r = half_width / (np.cos(th) ** power + np.sin(th) ** power) ** (1.0 / power)
    return DiscreteCurve(np.stack([r * np.cos(th), r * np.sin(th)], axis=1))


def sine_reparam(amplitude):
    """theta -> theta + amplitude*sin(theta), a Diff+(S^1) element for |a|<1."""

    def phi(theta):
        return theta + amplitude * np.sin(theta)

    return phi


def rotation_reparam(angle):
    def phi(theta):
        return theta + angle

    return phi


def reparametrize(curve, phi):
    """Resample a curve at the reparametrized grid via its trig interpolant."""
    from . import deriv

    new_theta = np.mod(phi(curve.theta), 2.0 * np.pi)
    return DiscreteCurve(deriv.fourier_evaluate(curve.samples, new_theta))
