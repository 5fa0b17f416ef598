"""Chaotic-flow constants: Roessler integration, Lyapunov spectrum, Feigenbaum delta.

The Roessler system (dx=-y-z, dy=x+a*y, dz=b+z*(x-c)) supplies the
micro-structure model: its Lyapunov spectrum and Kaplan-Yorke dimension
are measured by Benettin tangent-space evolution, and the period-doubling
constant delta is extracted from superstable parameters of the logistic
map at software precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from numba import njit

from .errors import ConvergenceError, DivergenceError, DomainError

__all__ = [
    "RosslerParams",
    "LyapunovSpectrum",
    "FeigenbaumResult",
    "integrate_rossler",
    "lyapunov_spectrum",
    "kaplan_yorke_dimension",
    "scaling_factor",
    "feigenbaum_delta",
]

_DIVERGENCE_BOUND = 1.0e6


@dataclass(frozen=True)
class RosslerParams:
    a: float = 0.2
    b: float = 0.2
    c: float = 5.7

    def __post_init__(self):
        if self.c <= 0:
            raise DomainError(f"c must be positive, got {self.c}")


@dataclass(frozen=True)
class LyapunovSpectrum:
    """Exponents sorted descending (1/time) plus Kaplan-Yorke dimension."""

    exponents: tuple[float, float, float]
    ky_dimension: float


@dataclass(frozen=True)
class FeigenbaumResult:
    """delta estimate, successive ratio estimates, superstable parameters
    (parameters[n] makes the critical point periodic with period 2**n),
    and the digits achieved."""

    delta: mp.mpf
    ratios: list
    parameters: list
    achieved_digits: int


@njit(cache=True)
def _rossler_traj(a, b, c, x0, y0, z0, dt, steps):
    out = np.empty((steps + 1, 3))
    x, y, z = x0, y0, z0
    out[0, 0], out[0, 1], out[0, 2] = x, y, z
    for i in range(steps):
        k1x = -y - z
        k1y = x + a * y
        k1z = b + z * (x - c)
        x2, y2, z2 = x + 0.5 * dt * k1x, y + 0.5 * dt * k1y, z + 0.5 * dt * k1z
        k2x = -y2 - z2
        k2y = x2 + a * y2
        k2z = b + z2 * (x2 - c)
        x3, y3, z3 = x + 0.5 * dt * k2x, y + 0.5 * dt * k2y, z + 0.5 * dt * k2z
        k3x = -y3 - z3
        k3y = x3 + a * y3
        k3z = b + z3 * (x3 - c)
        x4, y4, z4 = x + dt * k3x, y + dt * k3y, z + dt * k3z
        k4x = -y4 - z4
        k4y = x4 + a * y4
        k4z = b + z4 * (x4 - c)
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        y += dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        z += dt / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z)
        out[i + 1, 0], out[i + 1, 1], out[i + 1, 2] = x, y, z
        if abs(x) > _DIVERGENCE_BOUND or abs(y) > _DIVERGENCE_BOUND or abs(z) > _DIVERGENCE_BOUND:
            return out[: i + 2], i
    return out, -1


@njit(cache=True)
def _combined_deriv(s, a, b, c):
    """12-vector: trajectory (x,y,z) plus three tangent columns."""
    d = np.empty(12)
    x, y, z = s[0], s[1], s[2]
    d[0] = -y - z
    d[1] = x + a * y
    d[2] = b + z * (x - c)
    for j in range(3):
        vx, vy, vz = s[3 + j], s[6 + j], s[9 + j]
        d[3 + j] = -vy - vz
        d[6 + j] = vx + a * vy
        d[9 + j] = z * vx + (x - c) * vz
    return d


@njit(cache=True)
def _benettin(a, b, c, dt, settle, span, gs_every):
    s = np.zeros(12)
    s[3] = 1.0
    s[7] = 1.0
    s[11] = 1.0
    sums = np.zeros(3)
    for step in range(settle + span):
        k1 = _combined_deriv(s, a, b, c)
        k2 = _combined_deriv(s + 0.5 * dt * k1, a, b, c)
        k3 = _combined_deriv(s + 0.5 * dt * k2, a, b, c)
        k4 = _combined_deriv(s + dt * k3, a, b, c)
        s = s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if abs(s[0]) > _DIVERGENCE_BOUND or abs(s[1]) > _DIVERGENCE_BOUND or abs(s[2]) > _DIVERGENCE_BOUND:
            return sums, step
        if (step + 1) % gs_every == 0:
            for j in range(3):
                for i in range(j):
                    dot = s[3 + j] * s[3 + i] + s[6 + j] * s[6 + i] + s[9 + j] * s[9 + i]
                    s[3 + j] -= dot * s[3 + i]
                    s[6 + j] -= dot * s[6 + i]
                    s[9 + j] -= dot * s[9 + i]
                nrm = math.sqrt(s[3 + j] ** 2 + s[6 + j] ** 2 + s[9 + j] ** 2)
                s[3 + j] /= nrm
                s[6 + j] /= nrm
                s[9 + j] /= nrm
                if step >= settle:
                    sums[j] += math.log(nrm)
    return sums, -1


def integrate_rossler(
    params: RosslerParams,
    initial: tuple[float, float, float] = (0.0, 0.0, 0.0),
    dt: float = 0.01,
    steps: int = 100_000,
) -> np.ndarray:
    """Fixed-step RK4 trajectory of shape (steps+1, 3)."""
    if not 0.0 < dt <= 0.05:
        raise DomainError(f"dt must lie in (0, 0.05], got {dt}")
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    x0, y0, z0 = (float(v) for v in initial)
    out, diverged = _rossler_traj(params.a, params.b, params.c, x0, y0, z0, float(dt), int(steps))
    if diverged >= 0:
        raise DivergenceError(f"trajectory diverged at step {diverged}", step=diverged)
    return out


def kaplan_yorke_dimension(exponents) -> float:
    """j + (sum of first j exponents)/|exponent j+1| for the largest
    j whose partial sum is nonnegative."""
    exps = sorted(exponents, reverse=True)
    partial = 0.0
    j = 0
    for i, lam in enumerate(exps):
        if partial + lam < 0.0:
            break
        partial += lam
        j = i + 1
    if j == len(exps):
        return float(j)
    return j + partial / abs(exps[j])


def lyapunov_spectrum(
    params: RosslerParams,
    settle: int = 20_000,
    span: int = 1_000_000,
    dt: float = 0.01,
    gs_every: int = 10,
) -> LyapunovSpectrum:
    """Benettin tangent-space exponents averaged over `span` steps.

    `settle` steps are discarded first; tangent vectors are re-orthonormalized
    every `gs_every` (<= 10) steps.
    """
    if settle < 10_000:
        raise DomainError(f"settle must be >= 10000 steps, got {settle}")
    if span < 1_000_000:
        raise DomainError(f"span must be >= 1000000 steps, got {span}")
    if not 0.0 < dt <= 0.05:
        raise DomainError(f"dt must lie in (0, 0.05], got {dt}")
    if not 1 <= gs_every <= 10:
        raise DomainError(f"gs_every must lie in 1..10, got {gs_every}")
    sums, diverged = _benettin(params.a, params.b, params.c, float(dt), int(settle), int(span), int(gs_every))
    if diverged >= 0:
        raise DivergenceError(f"trajectory diverged at step {diverged}", step=diverged)
    exps = tuple(sorted((float(v) for v in sums / (span * dt)), reverse=True))
    return LyapunovSpectrum(exps, kaplan_yorke_dimension(exps))


def scaling_factor(lam: float, dimension: float) -> float:
    """Scale-change factor dimension**2 * exp(sqrt(pi*lam))."""
    if lam <= 0.0:
        raise DomainError(f"lam must be positive, got {lam}")
    if dimension <= 0.0:
        raise DomainError(f"dimension must be positive, got {dimension}")
    return dimension**2 * math.exp(math.sqrt(math.pi * lam))


def _superstable(seed, level: int, dps: int):
    """Damped Newton on f_a^(2**level)(1/2) = 1/2 for the logistic map."""
    period = 2**level
    tol = mp.mpf(10) ** (-(dps - 6))
    a = mp.mpf(seed)
    half = mp.mpf("0.5")

    def orbit(a_val):
        x, u = half, mp.mpf(0)
        for _ in range(period):
            u = x * (1 - x) + a_val * (1 - 2 * x) * u
            x = a_val * x * (1 - x)
        return x - half, u

    g, dg = orbit(a)
    for _ in range(60):
        if abs(g) < tol:
            return a
        step = g / dg
        for _ in range(30):
            g_new, dg_new = orbit(a - step)
            if abs(g_new) < abs(g):
                break
            step /= 2
        else:
            raise ConvergenceError(f"Newton stalled at level {level}", level=level)
        a -= step
        g, dg = g_new, dg_new
    raise ConvergenceError(f"Newton did not converge at level {level}", level=level)


def feigenbaum_delta(levels: int = 12, precision_digits: int = 40) -> FeigenbaumResult:
    """Period-doubling constant from superstable logistic parameters.

    Superstable parameters a_n (critical point periodic with period 2**n)
    are found by Newton seeded from the previous level plus geometric
    extrapolation; delta is the limit of consecutive gap ratios
    (a_{n-1}-a_{n-2})/(a_n-a_{n-1}).  The reported value applies one
    Richardson step to the last ratio (ratio errors shrink by 1/delta per
    level, so the step removes the leading error term).
    """
    if not 6 <= levels <= 20:
        raise DomainError(f"levels must lie in 6..20, got {levels}")
    if precision_digits < 30:
        raise DomainError(f"precision_digits must be >= 30, got {precision_digits}")
    dps = precision_digits + 15
    with mp.workdps(dps):
        params = [mp.mpf(2), 1 + mp.sqrt(5)]  # period 1 (a/4 = 1/2) and period 2, exact
        guess = mp.mpf("4.669")
        ratios: list = []
        for level in range(2, levels + 1):
            gap = params[-1] - params[-2]
            a_new = _superstable(params[-1] + gap / guess, level, dps)
            ratios.append(gap / (a_new - params[-1]))
            guess = ratios[-1]
            params.append(a_new)
        delta = ratios[-1] + (ratios[-1] - ratios[-2]) / (ratios[-1] - 1)
        spread = abs(ratios[-1] - ratios[-2])
        if spread == 0:
            achieved = precision_digits
        else:
            achieved = min(precision_digits, int(mp.floor(-mp.log10(spread / delta))))
        return FeigenbaumResult(
            delta=+delta,
            ratios=[+r for r in ratios],
            parameters=[+a for a in params],
            achieved_digits=achieved,
        )
