"""Numerics for matching closed plane curves through symmetry lifting.

Subpackages cover discrete curve geometry (curvegeo), Sobolev-type
velocity metrics (sobolev), the coupled horizontal/vertical field
equations and their boundary-value solver (unreduction), hyperbolic
curvature flow (hypflow), holonomy on the Hopf bundle (hopf),
SU(2)/U(1) sigma-model residuals and reconstruction (sigma), and a
declarative experiment runner (cli).
"""

__version__ = "0.1.0"
