"""Sieve-backed prime lookups for the lower-bound pipeline."""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from math import isqrt
from pathlib import Path

import numpy as np

from ._intmath import iroot

DEFAULT_LIMIT = 2_000_000


def sieve(limit: int) -> np.ndarray:
    """All primes <= limit (Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return np.flatnonzero(flags).astype(np.int64)


class PrimeTable:
    """Primes up to ``limit``; grows by doubling, reads are lock-free."""

    def __init__(self, limit: int = DEFAULT_LIMIT, cache_dir: str | os.PathLike | None = None):
        self._lock = threading.Lock()
        self._cache_dir = Path(cache_dir) if cache_dir else None
        self.limit = 0
        self.primes = np.zeros(0, dtype=np.int64)
        self._extend_to(limit)

    def _load(self, limit: int) -> np.ndarray:
        if self._cache_dir is None:
            return sieve(limit)
        path = self._cache_dir / f"primes_{limit}.npy"
        if path.exists():
            return np.load(path)
        primes = sieve(limit)
        self._cache_dir.mkdir(parents=True, exist_ok=True)
        np.save(path, primes)
        return primes

    def _extend_to(self, limit: int) -> None:
        with self._lock:
            if limit <= self.limit:
                return
            new = max(limit, 2 * self.limit)
            primes = self._load(new)
            self.primes, self.limit = primes, new

    def ensure(self, limit: int) -> None:
        if limit > self.limit:
            self._extend_to(limit)

    def is_prime(self, n: int) -> bool:
        self.ensure(n)
        i = np.searchsorted(self.primes, n)
        return bool(i < len(self.primes) and self.primes[i] == n)

    def next_prime_above(self, n: int) -> int:
        while True:
            primes = self.primes
            i = int(np.searchsorted(primes, n, side="right"))
            if i < len(primes):
                return int(primes[i])
            self._extend_to(2 * max(n, self.limit))

    def largest_at_most(self, n: int) -> int | None:
        self.ensure(n)
        i = int(np.searchsorted(self.primes, n, side="right"))
        return int(self.primes[i - 1]) if i else None


_table: PrimeTable | None = None
_table_lock = threading.Lock()


def default_table() -> PrimeTable:
    global _table
    if _table is None:
        with _table_lock:
            if _table is None:
                _table = PrimeTable(cache_dir=os.environ.get("SIDONLAB_CACHE_DIR"))
    return _table


def bertrand_prime(n: int) -> int:
    """Smallest prime p with n < p <= 2n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    p = default_table().next_prime_above(n)
    if p > 2 * n:
        raise RuntimeError(f"no prime in ({n}, {2 * n}]")
    return p


def _as_fraction(delta) -> Fraction:
    delta = Fraction(delta)
    if not 0 < delta <= 1:
        raise ValueError(f"need 0 < delta <= 1, got {delta}")
    return delta


def gap_width(x: int, delta) -> int:
    """floor(x^delta) for rational delta = a/b, as floor((x^a)^(1/b))."""
    delta = _as_fraction(delta)
    return iroot(x ** delta.numerator, delta.denominator)


def gap_prime(x: int, delta, x0: int = 2) -> int | None:
    """Largest prime in (x - floor(x^delta), x], or None when that window is empty of primes."""
    if x < max(x0, 2):
        raise ValueError(f"need x >= max(x0, 2), got x={x}, x0={x0}")
    p = default_table().largest_at_most(x)
    if p is not None and p > x - gap_width(x, delta):
        return p
    return None


def gap_prime_failures(delta, x0: int, x_max: int) -> list[int]:
    """Every x in [x0, x_max] where the prime-gap window (x - x^delta, x] has no prime."""
    return [x for x in range(max(x0, 2), x_max + 1) if gap_prime(x, delta, x0) is None]
