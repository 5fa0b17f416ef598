"""Prime-power kernels: sieve, von Mangoldt, Chebyshev psi, explicit formula.

The von Mangoldt weight ln(p) on prime powers p**k indexes every spectrum
in the package.  Chebyshev psi is computed two independent ways (sum of
weights vs. log of the exact big-integer lcm) so one can always audit the
other; the lcm route is the oracle, the sum route the production path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "PrimePowerEntry",
    "PsiValue",
    "is_prime",
    "sieve_primes",
    "decompose_prime_power",
    "mangoldt",
    "mangoldt_sieve",
    "prime_powers_upto",
    "chebyshev_psi_sum",
    "chebyshev_psi_lcm",
    "psi_value",
    "om_knot_volume",
    "om_wave_exponent",
    "explicit_formula_psi",
]


@dataclass(frozen=True)
class PrimePowerEntry:
    """n with its decomposition p**k (absent if n is not a prime power)."""

    n: int
    p: int | None
    k: int | None
    mangoldt: float


@dataclass(frozen=True)
class PsiValue:
    """Chebyshev psi at n via both routes; they agree to 1e-9."""

    n: int
    psi_sum: float
    psi_lcm: float


# Witness set making Miller-Rabin deterministic far beyond 1e9.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending; empty below 2."""
    if limit < 2:
        return []
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return [int(p) for p in np.flatnonzero(mask)]


def _kth_root(n: int, k: int) -> int | None:
    """Exact integer k-th root of n, or None."""
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 2 and cand**k == n:
            return cand
    return None


def decompose_prime_power(n: int) -> PrimePowerEntry:
    """Decompose n = p**k when possible and attach the von Mangoldt weight."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n == 1:
        return PrimePowerEntry(1, None, None, 0.0)
    if is_prime(n):
        return PrimePowerEntry(n, n, 1, math.log(n))
    for k in range(2, n.bit_length()):
        p = _kth_root(n, k)
        if p is not None and is_prime(p):
            return PrimePowerEntry(n, p, k, math.log(p))
    return PrimePowerEntry(n, None, None, 0.0)


def mangoldt(n: int) -> float:
    """von Mangoldt weight: ln(p) if n = p**k, else 0."""
    return decompose_prime_power(n).mangoldt


def mangoldt_sieve(limit: int) -> np.ndarray:
    """Array a with a[n] = mangoldt(n) for 0 <= n <= limit."""
    if limit < 0:
        raise DomainError(f"limit must be >= 0, got {limit}")
    lam = np.zeros(limit + 1)
    for p in sieve_primes(limit):
        logp = math.log(p)
        q = p
        while q <= limit:
            lam[q] = logp
            q *= p
    return lam


def prime_powers_upto(limit: int) -> list[int]:
    """Ascending prime powers p**k <= limit (2, 3, 4, 5, 7, 8, 9, ...)."""
    if limit < 2:
        return []
    lam = mangoldt_sieve(limit)
    return [int(n) for n in np.flatnonzero(lam > 0.0)]


def chebyshev_psi_sum(n: int) -> float:
    """Chebyshev psi(n) as the sum of von Mangoldt weights up to n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return math.fsum(mangoldt_sieve(n)[2:]) if n >= 2 else 0.0


def chebyshev_psi_lcm(n: int) -> float:
    """Chebyshev psi(n) as log of the exact big-integer lcm(1..n).

    Oracle route for :func:`chebyshev_psi_sum`; the lcm is computed exactly
    before the single log at the end.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    acc = 1
    for m in range(2, n + 1):
        acc = math.lcm(acc, m)
    return math.log(acc)


def psi_value(n: int) -> PsiValue:
    """Both psi routes for n, bundled."""
    return PsiValue(n, chebyshev_psi_sum(n), chebyshev_psi_lcm(n))


def om_knot_volume(p: int) -> float:
    """Knot-complement volume assigned to the prime p: ln(p)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return math.log(p)


def om_wave_exponent(n: int) -> float:
    """Exponent of the scale wave function at n; identical to mangoldt(n)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return mangoldt(n)


def explicit_formula_psi(x: float, zeros: Sequence) -> float:
    """Truncated explicit-formula estimate of Chebyshev psi(x).

    psi(x) ~ x - sum_rho x**rho / rho - ln(2*pi) - 0.5*ln(1 - x**-2), with
    each zero pair rho = 1/2 +- i*sigma contributing 2*Re(x**rho / rho).
    Accepts ZetaZero records or bare sigma floats; accuracy improves with
    the number of zeros supplied (best away from prime powers, where psi
    jumps).
    """
    if x <= 1.0:
        raise DomainError(f"x must be > 1, got {x}")
    est = x - math.log(2.0 * math.pi) - 0.5 * math.log1p(-(x**-2))
    if zeros:
        sig = np.array([getattr(z, "sigma", z) for z in zeros], dtype=float)
        rho = 0.5 + 1j * sig
        est -= float(np.sum(2.0 * np.real(x**rho / rho)))
    return est
