"""Fixed constants of the OM correspondence.

The correspondence replaces the Planck momentum by 4*pi**2 and maps the
remaining kinematic constants to fixed complex numbers.  Everything derived
lives in :mod:`omqm.quantities`; this module only holds the configured
inputs (Feigenbaum delta, fractal dimension, spin sign) and the constants
they determine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Feigenbaum period-doubling constant, to double precision.  dynamics can
# recompute it to arbitrary digits; this is the default configuration value.
FEIGENBAUM_DELTA = 4.669201609102990

# Conventional fractal dimension used by the fine-structure chain.  The
# classic Roessler flow measures a Kaplan-Yorke dimension near 2.01, not
# this value; dynamics reports the measured number and this stays pure
# configuration (see README).
FRACTAL_DIMENSION = 2.974283562752


@dataclass(frozen=True)
class OMConstants:
    """Configured constants: delta, fractal dimension, and the spin sign.

    All other members are fixed by the correspondence and exposed as
    read-only properties so they can never drift out of sync.
    """

    delta: float = FEIGENBAUM_DELTA
    dimension: float = FRACTAL_DIMENSION
    s_sign: int = 1

    def __post_init__(self):
        if self.s_sign not in (1, -1):
            raise DomainError(f"s_sign must be +1 or -1, got {self.s_sign}")
        if self.delta < 0:
            raise DomainError(f"delta must be nonnegative, got {self.delta}")
        if self.dimension <= 0:
            raise DomainError(f"dimension must be positive, got {self.dimension}")

    @property
    def momentum(self) -> float:
        """Momentum constant 4*pi**2 (equals |light_speed|**2)."""
        return (2.0 * math.pi) ** 2

    @property
    def light_speed(self) -> complex:
        """Speed constant -2*pi*i: magnitude 2*pi, directed into the cell."""
        return -2j * math.pi

    @property
    def charge(self) -> float:
        """Charge constant 2*pi, the residue of a 1/z loop around the cell."""
        return 2.0 * math.pi

    @property
    def cell_length(self) -> float:
        """Minimal cell length in its own units; identically 1."""
        return 1.0

    @property
    def spin(self) -> complex:
        """Spin constant +-(i - 1); squares to -2i for either sign."""
        return complex(-self.s_sign, self.s_sign)

    @property
    def amplitude(self) -> float:
        """Scale amplitude exp(sqrt(pi*delta)), recomputed from delta."""
        return math.exp(math.sqrt(math.pi * self.delta))

    def radial_scale(self, n: int) -> float:
        """Radial coordinate magnitude for scale n: n / (2*pi)."""
        return n / (2.0 * math.pi)


DEFAULT_CONSTANTS = OMConstants()
