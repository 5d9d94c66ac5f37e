"""Exception types shared across the package."""


class UnredError(Exception):
    """Base class for all package-specific errors."""


class RegularityError(UnredError):
    """Parametrization speed fell below the regularity floor."""


class LengthMismatch(UnredError):
    """An array argument does not match the expected grid size."""


class ShapeMismatch(UnredError):
    """Grid-shaped arguments disagree in shape."""


class NonConvergence(UnredError):
    """Iterative solver failed to reach the requested tolerance."""

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class CornerMismatch(UnredError):
    """Dirichlet boundary edges disagree at a rectangle corner."""


class SingularityStop(UnredError):
    """Curvature flow collapsed before the requested final time."""

    def __init__(self, message, trajectory=None, last_time=None):
        super().__init__(message)
        self.trajectory = trajectory
        self.last_time = last_time


class NormError(UnredError):
    """A quaternion drifted off the unit sphere beyond tolerance."""


class PeriodicityError(UnredError):
    """No periodic solution exists for the requested vertical ODE."""


class ProjectionDrift(UnredError):
    """A lifted path stopped projecting onto its base path."""


class FlatnessError(UnredError):
    """Reconstruction attempted on a field that is not flat."""


class ConfigError(UnredError):
    """A run configuration failed validation."""

    def __init__(self, diagnostics):
        if isinstance(diagnostics, str):
            diagnostics = [diagnostics]
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))
