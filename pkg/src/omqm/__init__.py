"""Number-theoretic and chaotic-dynamics calculator for the OM correspondence.

The package computes and cross-checks every evaluable piece of the
correspondence: prime-power kernels (von Mangoldt, Chebyshev psi), zeta
zeros on the critical line, chaos constants (Feigenbaum delta, Roessler
Lyapunov spectrum), loop reduction to cell data, and the derived OM
quantities (mass, energy, fine-structure chain, gravitational and
cosmological analogs, holographic split).
"""

from .constants import DEFAULT_CONSTANTS, FEIGENBAUM_DELTA, FRACTAL_DIMENSION, OMConstants
from .dynamics import (
    FeigenbaumResult,
    LyapunovSpectrum,
    RosslerParams,
    feigenbaum_delta,
    integrate_rossler,
    kaplan_yorke_dimension,
    lyapunov_spectrum,
    scaling_factor,
)
from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    ParseError,
    ResourceError,
)
from .moduli import OMKnotData, PlanarPath, load_path, reduce_to_om_knot, winding_number
from .numtheory import (
    PrimePowerEntry,
    PsiValue,
    chebyshev_psi_lcm,
    chebyshev_psi_sum,
    decompose_prime_power,
    explicit_formula_psi,
    is_prime,
    mangoldt,
    mangoldt_sieve,
    om_knot_volume,
    om_wave_exponent,
    prime_powers_upto,
    psi_value,
    sieve_primes,
)
from .quantities import (
    FirstOrderFactorization,
    HolographySplit,
    OMSpectrumRow,
    UncertaintyCheck,
    alpha_inverse,
    alpha_limit_ratio,
    cosmological_constant,
    einstein_factorization,
    gravitational_constant,
    heisenberg_product,
    holography_split,
    om_curvature,
    om_energy_squared,
    om_mass,
    om_mass_mangoldt,
    om_permittivity,
    spectrum_rows,
)
from .zeta import (
    T_MAX,
    ZetaZero,
    find_zeros,
    hardy_z,
    load_zeros,
    riemann_von_mangoldt_estimate,
    save_zeros,
)

__version__ = "0.1.0"
