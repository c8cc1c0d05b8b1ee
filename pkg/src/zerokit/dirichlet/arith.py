"""Elementary arithmetic sums over the rational integers.

These are the degree-one instances of the ideal sums the inequalities quote:
the von Mangoldt harmonic sum, the smoothed harmonic sum with polynomial
cutoff, the plain harmonic sum V(z), and the prime windows used by the
detector and the large-sieve checks.  Everything is direct sieve-and-sum;
desk-scale guards keep runtimes predictable.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

__all__ = [
    "DESK_SUM_LIMIT",
    "harmonic_sum",
    "int_nth_root",
    "primes_in_window",
    "primes_up_to",
    "rough_mask",
    "smoothed_harmonic_sum",
    "von_mangoldt_sum",
]


def int_nth_root(x: int, m: int) -> int:
    """Largest r with r**m <= x, in exact integer arithmetic."""
    r = int(round(x ** (1.0 / m)))
    while r**m > x:
        r -= 1
    while (r + 1) ** m <= x:
        r += 1
    return r

DESK_SUM_LIMIT = 10**8


@lru_cache(maxsize=8)
def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_up_to(n: int) -> np.ndarray:
    """Primes <= n as an int64 array (cached for repeated limits)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    if n > DESK_SUM_LIMIT:
        raise ValueError(f"prime sieve limited to {DESK_SUM_LIMIT} at desk scale")
    # Round the cached sieve limit up so nearby requests share one sieve.
    limit = 1 << max(int(n).bit_length(), 10)
    limit = min(limit, DESK_SUM_LIMIT)
    if limit < n:
        limit = n
    primes = _sieve(limit)
    return primes[primes <= n]


def primes_in_window(lo: float, hi: float) -> np.ndarray:
    """Primes p with lo <= p < hi (half-open window)."""
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    primes = primes_up_to(int(math.ceil(hi)))
    return primes[(primes >= lo) & (primes < hi)]


def von_mangoldt_sum(y: float) -> float:
    """sum_{n <= y} Lambda(n)/n by sieving the prime powers."""
    if y < 2.0:
        return 0.0
    if y > DESK_SUM_LIMIT:
        raise ValueError(f"von_mangoldt_sum limited to y <= {DESK_SUM_LIMIT}")
    primes = primes_up_to(int(y))
    logs = np.log(primes.astype(float))
    # First powers vectorised, higher powers per prime (only p <= sqrt(y)).
    total = float(np.sum(logs / primes))
    for p, logp in zip(primes[primes * primes <= y], logs[primes * primes <= y]):
        pm = int(p) * int(p)
        while pm <= y:
            total += logp / pm
            pm *= int(p)
    return total


def smoothed_harmonic_sum(x: float, n_K: int = 1) -> float:
    """sum_{n <= x} (1/n) (1 - n/x)^{n_K}, by direct summation.

    The main term is log x - H_{n_K} + Euler's constant (degree-one case,
    residue 1), with an O(x^(-1/2)) fluctuation.
    """
    if x <= 0.0:
        raise ValueError("x must be positive")
    if n_K < 1:
        raise ValueError("n_K must be a positive integer")
    if x > DESK_SUM_LIMIT:
        raise ValueError(f"smoothed_harmonic_sum limited to x <= {DESK_SUM_LIMIT}")
    top = int(x)  # the n = x term vanishes, so flooring is harmless
    total = 0.0
    chunk = 4_000_000
    for start in range(1, top + 1, chunk):
        n = np.arange(start, min(start + chunk, top + 1), dtype=float)
        total += float(np.sum((1.0 - n / x) ** n_K / n))
    return total


def harmonic_sum(z: float) -> float:
    """V(z) = sum_{n <= z} 1/n."""
    if z < 1.0:
        return 0.0
    if z > DESK_SUM_LIMIT:
        raise ValueError(f"harmonic_sum limited to z <= {DESK_SUM_LIMIT}")
    n = np.arange(1, int(z) + 1, dtype=float)
    return float(np.sum(1.0 / n))


def rough_mask(n: np.ndarray, z: float) -> np.ndarray:
    """Boolean mask of entries with no prime factor <= z (1 counts as rough)."""
    n = np.asarray(n, dtype=np.int64)
    mask = np.ones(n.shape, dtype=bool)
    for p in primes_up_to(int(z)):
        mask &= (n % p) != 0
    return mask
