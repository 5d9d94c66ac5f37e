"""Declarative vertical force profiles.

Profiles form a fixed registry (zero / constant / sinusoidal in theta)
so that run configurations stay reproducible.
"""

from dataclasses import dataclass

import numpy as np

KINDS = ("zero", "constant", "sinusoidal")


@dataclass(frozen=True)
class ForceProfile:
    kind: str = "zero"
    amplitude: float = 0.0
    frequency: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"force kind must be one of {KINDS}")
        if self.kind == "sinusoidal" and int(self.frequency) != self.frequency:
            raise ValueError("frequency must be an integer wavenumber")

    def evaluate(self, n):
        """N-array of vertical force values on the uniform theta grid."""
        if self.kind == "zero":
            return np.zeros(n)
        if self.kind == "constant":
            return np.full(n, float(self.amplitude))
        theta = 2.0 * np.pi * np.arange(n) / n
        return self.amplitude * np.sin(self.frequency * theta)


ZERO_FORCE = ForceProfile("zero")
