"""Riemann zeta zeros on the critical line at desk scale (t <= 500).

The engine is the Hardy Z function: Z(t) = exp(i*theta(t)) * zeta(1/2+it)
is real on the critical line and its sign changes bracket the zeros.
zeta on the line is summed by Euler-Maclaurin with Bernoulli corrections;
theta comes from the exact log-gamma form (the asymptotic series breaks
down near t = 0, the log-gamma form does not).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np
from scipy.special import loggamma

from .errors import DomainError, ParseError, ResourceError

__all__ = [
    "T_MAX",
    "ZetaZero",
    "hardy_z",
    "find_zeros",
    "load_zeros",
    "save_zeros",
    "riemann_von_mangoldt_estimate",
]

# Validity window of the fixed-cutoff Euler-Maclaurin evaluation.
T_MAX = 500.0

_SCAN_STEP = 0.1
_SCAN_START = 1.0
_BISECT_TOL = 1e-8
# B_2, B_4, ..., B_12 over nothing; divided by (2k)! on the fly.
_B2K = (1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730)
_CHUNK = 512


@dataclass(frozen=True)
class ZetaZero:
    """index (1-based, ascending), imaginary part sigma, uncertainty bound."""

    index: int
    sigma: float
    tolerance: float


def _zeta_critical(t: np.ndarray) -> np.ndarray:
    """zeta(1/2 + i*t) for a small array of t >= 0."""
    s = 0.5 + 1j * t
    cutoff = int(np.max(t)) + 20
    n = np.arange(1.0, cutoff)
    total = (np.exp(np.outer(-1j * t, np.log(n))) * n**-0.5).sum(axis=1)
    npow = np.exp(-s * math.log(cutoff))  # cutoff**-s
    total += npow * cutoff / (s - 1.0) + 0.5 * npow
    fact = 1.0
    for k, b2k in enumerate(_B2K, start=1):
        fact *= (2 * k - 1) * (2 * k)
        rising = np.ones_like(s)
        for j in range(2 * k - 1):
            rising = rising * (s + j)
        total += (b2k / fact) * float(cutoff) ** (1 - 2 * k) * npow * rising
    return total


def hardy_z(t):
    """Hardy Z at t (scalar or array), real-valued on 0 <= t <= T_MAX."""
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    flat = np.atleast_1d(arr)
    if flat.size and (flat.min() < 0.0 or flat.max() > T_MAX):
        raise DomainError(f"t must lie in [0, {T_MAX}]")
    out = np.empty(flat.shape)
    for i in range(0, flat.size, _CHUNK):
        block = flat[i : i + _CHUNK]
        theta = np.imag(loggamma(0.25 + 0.5j * block)) - 0.5 * block * math.log(math.pi)
        out[i : i + _CHUNK] = np.real(np.exp(1j * theta) * _zeta_critical(block))
    return float(out[0]) if scalar else out


def _bisect(lo: float, hi: float, f_lo: float) -> float:
    """Bisect a sign change of Z down to an interval below _BISECT_TOL."""
    while hi - lo > _BISECT_TOL * 0.5:
        mid = 0.5 * (lo + hi)
        f_mid = hardy_z(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_zeros(count: int) -> list[ZetaZero]:
    """First `count` zeros by sign-change scan at step 0.1 plus bisection.

    count is capped at 100 (desk scale); the scan never leaves [0, T_MAX].
    """
    if count < 0 or count > 100:
        raise DomainError(f"count must be in 0..100, got {count}")
    if count == 0:
        return []
    zeros: list[ZetaZero] = []
    t0 = _SCAN_START
    block_pts = 400
    while t0 < T_MAX and len(zeros) < count:
        t1 = min(t0 + block_pts * _SCAN_STEP, T_MAX)
        grid = np.arange(t0, t1 + 0.5 * _SCAN_STEP, _SCAN_STEP)
        grid = grid[grid <= T_MAX]
        vals = hardy_z(grid)
        neg = np.signbit(vals)
        for i in np.flatnonzero(neg[1:] != neg[:-1]):
            sigma = _bisect(float(grid[i]), float(grid[i + 1]), float(vals[i]))
            zeros.append(ZetaZero(len(zeros) + 1, sigma, _BISECT_TOL))
            if len(zeros) == count:
                break
        t0 = float(grid[-1])
    if len(zeros) < count:
        raise ResourceError(
            f"found only {len(zeros)} of {count} zeros scanning up to t={T_MAX}"
        )
    return zeros


def _decimal_digits(text: str) -> int:
    if "." not in text:
        return 0
    return len(text.split(".", 1)[1].strip())


def load_zeros(source: str | os.PathLike | TextIO) -> list[ZetaZero]:
    """Parse a zero-list file: one ascending sigma per line, '#' comments.

    The per-zero tolerance is 10**-(decimal digits provided).
    """
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    zeros: list[ZetaZero] = []
    prev = -math.inf
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            sigma = float(text)
        except ValueError:
            raise ParseError(f"line {lineno}: not a number: {text!r}") from None
        if not math.isfinite(sigma) or sigma <= prev:
            raise ParseError(f"line {lineno}: non-monotone value {text!r}")
        prev = sigma
        zeros.append(ZetaZero(len(zeros) + 1, sigma, 10.0 ** -_decimal_digits(text)))
    return zeros


def save_zeros(zeros: Iterable[ZetaZero], target: str | os.PathLike | TextIO) -> None:
    """Emit the same plain-text format load_zeros ingests."""
    own = not hasattr(target, "write")
    fh = open(target, "w", encoding="utf-8") if own else target
    try:
        for z in zeros:
            digits = max(0, round(-math.log10(z.tolerance))) if z.tolerance < 1 else 0
            fh.write(f"{z.sigma:.{digits}f}\n")
    finally:
        if own:
            fh.close()


def riemann_von_mangoldt_estimate(t: float) -> float:
    """Expected zero count in [0, t]: (t/2pi)ln(t/2pi) - t/2pi + 7/8."""
    if t <= 0:
        return 0.0
    u = t / (2.0 * math.pi)
    return u * math.log(u) - u + 7.0 / 8.0
