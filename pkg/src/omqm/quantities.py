"""Derived OM quantities: mass, curvature, energy, the fine-structure chain,
uncertainty and field-equation analogs, and the holographic split.

Conventions used throughout (see README for the full derivation notes):

* mass is spin/N at prime powers and 0 elsewhere; the alternative
  spin*mangoldt(N) convention is exposed separately as `om_mass_mangoldt`.
* the i-th zeta zero is paired with the i-th prime power (2, 3, 4, 5, 7,
  8, 9, ...) -- the only order-preserving bijection; pass an explicit
  `rank` to plug a different pairing.
* square roots of negative or complex quantities take the principal
  branch; records that can hit that branch carry a flag.
* inverse fine structure is dimension * amplitude, the reading that
  reproduces both tabulated targets (see README on the spurious radical).
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .constants import DEFAULT_CONSTANTS, OMConstants
from .errors import DomainError, ResourceError
from .numtheory import decompose_prime_power, prime_powers_upto

__all__ = [
    "OMSpectrumRow",
    "HolographySplit",
    "UncertaintyCheck",
    "FirstOrderFactorization",
    "om_mass",
    "om_mass_mangoldt",
    "om_curvature",
    "om_energy_squared",
    "alpha_limit_ratio",
    "alpha_inverse",
    "om_permittivity",
    "heisenberg_product",
    "einstein_factorization",
    "gravitational_constant",
    "cosmological_constant",
    "holography_split",
    "spectrum_rows",
]


@dataclass(frozen=True)
class OMSpectrumRow:
    """Per-N record of the OM spectrum (complex scalars)."""

    n: int
    is_prime_power: bool
    mass: complex
    curvature: complex
    energy_sq: complex
    sigma: float | None


@dataclass(frozen=True)
class HolographySplit:
    """Curvature split into hidden (high) and observable (low) parts.

    r_high * r_low = mass and r_total**2 = r_high**2 + r_low**2 + 2*mass
    hold by construction; area_high is stored so that
    area_low = -area_high + 2*mass (the area-balance convention, which
    differs in sign from naive expansion -- see README).
    """

    r_high: complex
    r_low: complex
    r_total: complex
    area_low: complex
    area_high: complex
    entropy_low: complex | None


@dataclass(frozen=True)
class UncertaintyCheck:
    """Both sides of the uncertainty-product analog; ratio is reported,
    never asserted."""

    lhs: complex
    rhs: complex
    ratio: complex


@dataclass(frozen=True)
class FirstOrderFactorization:
    """First-order factor and the conjugate-product residual.

    residual = |first_order * conj(first_order) - radicand*(p0*spin)**2|
    measures how far the factorization is from reproducing the quadratic
    form (it does not vanish: |spin|**2 = 2 while spin**2 = -2i).
    """

    first_order: complex
    residual: float
    branch_flagged: bool


def om_mass(n: int, constants: OMConstants = DEFAULT_CONSTANTS) -> complex:
    """spin/n at prime powers, 0 elsewhere."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    entry = decompose_prime_power(n)
    if entry.p is None:
        return 0j
    return constants.spin / n


def om_mass_mangoldt(n: int, constants: OMConstants = DEFAULT_CONSTANTS) -> complex:
    """Alternative mass convention spin * mangoldt(n)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return constants.spin * decompose_prime_power(n).mangoldt


def om_curvature(n: int) -> complex:
    """Loop curvature mass/spin = 1/n at prime powers; 0 (no mass support)
    elsewhere."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if decompose_prime_power(n).p is None:
        return 0j
    return complex(1.0 / n)


def _rank_of(n: int) -> int:
    """1-based rank of the prime power n among all prime powers."""
    return len(prime_powers_upto(n))


def _sigma_for(rank: int, zeros: Sequence, context: str) -> float:
    if rank > len(zeros):
        raise ResourceError(f"{context} needs {rank} zeros; got {len(zeros)}")
    z = zeros[rank - 1]
    return float(getattr(z, "sigma", z))


def om_energy_squared(
    n: int,
    zeros: Sequence,
    constants: OMConstants = DEFAULT_CONSTANTS,
    rank: int | None = None,
) -> complex:
    """Squared energy at n: 0 off prime powers, else

        p0**2 * (spin**2 * sigma * p * ln(p) + spin/n + 2*spin**2/n**2)

    with p the prime base of n and sigma the zero paired to n (by
    prime-power rank unless `rank` overrides the pairing).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    entry = decompose_prime_power(n)
    if entry.p is None:
        return 0j
    sigma = _sigma_for(rank if rank is not None else _rank_of(n), zeros, f"energy at n={n}")
    s = constants.spin
    s2 = s * s
    curv = 1.0 / n
    inner = s2 * sigma * entry.p * math.log(entry.p) + s * curv + 2.0 * s2 * curv * curv
    return constants.momentum**2 * inner


def alpha_limit_ratio(n: int) -> float:
    """Ratio of consecutive x*ln(x) gaps; tends to 1 as n grows."""
    if n < 4:
        raise DomainError(f"n must be >= 4, got {n}")
    f2, f1, f0 = ((n - k) * math.log(n - k) for k in (2, 1, 0))
    return (f1 - f2) / (f0 - f1)


def alpha_inverse(constants: OMConstants = DEFAULT_CONSTANTS) -> float:
    """Inverse fine-structure value dimension * amplitude."""
    return constants.dimension * constants.amplitude


def om_permittivity(constants: OMConstants = DEFAULT_CONSTANTS) -> float:
    """Vacuum-permittivity counterpart: half of alpha_inverse."""
    return 0.5 * alpha_inverse(constants)


def heisenberg_product(
    i: int, zeros: Sequence, constants: OMConstants = DEFAULT_CONSTANTS
) -> UncertaintyCheck:
    """Uncertainty-product analog built from the gap sigma_{i+1} - sigma_i.

    lhs = dE * alpha / sqrt(dsigma) with
    dE**2 = p0**2 * spin**2 * dimension**2 * amplitude * dsigma (principal
    square root); rhs = p0 * spin.  The ratio is reported as data.
    """
    if i < 1:
        raise DomainError(f"i must be >= 1, got {i}")
    if i + 1 > len(zeros):
        raise ResourceError(f"uncertainty product at i={i} needs {i + 1} zeros; got {len(zeros)}")
    s1 = float(getattr(zeros[i - 1], "sigma", zeros[i - 1]))
    s2 = float(getattr(zeros[i], "sigma", zeros[i]))
    dsigma = s2 - s1
    if dsigma <= 0.0:
        raise DomainError(f"zero gap must be positive, got {dsigma}")
    c = constants
    de_sq = c.momentum**2 * c.spin**2 * c.dimension**2 * c.amplitude * dsigma
    lhs = cmath.sqrt(de_sq) / (alpha_inverse(c) * math.sqrt(dsigma))
    rhs = c.momentum * c.spin
    return UncertaintyCheck(lhs, rhs, lhs / rhs)


def _consecutive_prime_power_delta(i: int, zeros: Sequence):
    """(d_curvature, d_term) across prime powers of rank i and i+1."""
    if i < 1:
        raise DomainError(f"i must be >= 1, got {i}")
    powers = prime_powers_upto(max(64, 4 * (i + 2)))
    while len(powers) < i + 1:
        powers = prime_powers_upto(2 * powers[-1])
    n1, n2 = powers[i - 1], powers[i]
    if n1 == n2:
        raise DomainError("degenerate pair: equal scales")
    s1 = _sigma_for(i, zeros, f"pair at i={i}")
    s2 = _sigma_for(i + 1, zeros, f"pair at i={i}")
    p1 = decompose_prime_power(n1).p
    p2 = decompose_prime_power(n2).p
    d_curv = 1.0 / n2 - 1.0 / n1
    d_term = s2 * p2 * math.log(p2) - s1 * p1 * math.log(p1)
    return d_curv, d_term


def einstein_factorization(
    i: int, zeros: Sequence, constants: OMConstants = DEFAULT_CONSTANTS
) -> FirstOrderFactorization:
    """First-order factor p0*spin*(sqrt(2)*dR + i*sqrt(d_term)) across the
    prime powers of rank i, i+1, plus the conjugate-product residual."""
    d_curv, d_term = _consecutive_prime_power_delta(i, zeros)
    ps = constants.momentum * constants.spin
    first = ps * (math.sqrt(2.0) * d_curv + 1j * cmath.sqrt(d_term))
    radicand = 2.0 * d_curv * d_curv + d_term
    residual = abs(first * first.conjugate() - radicand * ps * ps)
    return FirstOrderFactorization(first, residual, branch_flagged=d_term < 0.0)


def gravitational_constant(
    constants: OMConstants = DEFAULT_CONSTANTS, mode: str = "derived"
) -> complex:
    """Gravitational-constant analog pi*(1 - dimension/2)/(2**e * spin).

    mode "derived" uses e = 3/2 (consistent with the sqrt(2) of the
    first-order factorization); mode "literal" reproduces the tabulated
    e = 2/3 as printed.  The two differ by the exact factor 2**(2/3-3/2).
    """
    if mode not in ("derived", "literal"):
        raise DomainError(f"mode must be 'derived' or 'literal', got {mode!r}")
    exponent = 1.5 if mode == "derived" else 2.0 / 3.0
    return math.pi * (1.0 - constants.dimension / 2.0) / (2.0**exponent * constants.spin)


def cosmological_constant(
    i: int, zeros: Sequence, constants: OMConstants = DEFAULT_CONSTANTS
) -> complex:
    """Cosmological-constant analog
    (i*pi/sqrt(2)) * ((1 - D/2)/D) * sqrt(d_term), principal branch."""
    _, d_term = _consecutive_prime_power_delta(i, zeros)
    d = constants.dimension
    return (1j * math.pi / math.sqrt(2.0)) * ((1.0 - d / 2.0) / d) * cmath.sqrt(d_term)


def holography_split(n: int, constants: OMConstants = DEFAULT_CONSTANTS) -> HolographySplit:
    """Split the curvature of a prime-power scale into hidden and
    observable parts and derive the area/entropy bookkeeping."""
    mass = om_mass(n, constants)
    if mass == 0:
        raise DomainError(f"n={n} is not a prime power (no mass support)")
    r_high = constants.spin
    r_low = mass / r_high
    r_total = r_high + r_low
    area_low = r_low * r_low
    area_high = 2.0 * mass - area_low
    g = gravitational_constant(constants, "derived")
    entropy_low = None if g == 0 else area_high / (4.0 * g) - mass / (2.0 * g)
    return HolographySplit(r_high, r_low, r_total, area_low, area_high, entropy_low)


def _spectrum_row(n: int, rank: dict[int, int], zeros: Sequence, constants: OMConstants) -> OMSpectrumRow:
    entry = decompose_prime_power(n)
    if entry.p is None:
        return OMSpectrumRow(n, False, 0j, 0j, 0j, None)
    r = rank[n]
    sigma = _sigma_for(r, zeros, f"spectrum row n={n}")
    return OMSpectrumRow(
        n,
        True,
        om_mass(n, constants),
        om_curvature(n),
        om_energy_squared(n, zeros, constants, rank=r),
        sigma,
    )


def spectrum_rows(
    n_max: int,
    zeros: Sequence,
    constants: OMConstants = DEFAULT_CONSTANTS,
    threads: int = 1,
) -> list[OMSpectrumRow]:
    """Spectrum table for n = 1..n_max.

    Needs one zero per prime power <= n_max.  `threads` > 1 partitions the
    range across a thread pool; the merge is by chunk order, so the result
    is identical for any thread count.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    powers = prime_powers_upto(n_max)
    if len(powers) > len(zeros):
        raise ResourceError(
            f"spectrum to n={n_max} needs {len(powers)} zeros (one per prime power); got {len(zeros)}"
        )
    rank = {q: idx + 1 for idx, q in enumerate(powers)}
    ns = range(1, n_max + 1)
    if threads <= 1:
        return [_spectrum_row(n, rank, zeros, constants) for n in ns]
    chunks = [range(lo, min(lo + 512, n_max + 1)) for lo in range(1, n_max + 1, 512)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda ch: [_spectrum_row(n, rank, zeros, constants) for n in ch], chunks
        )
        return [row for part in parts for row in part]
