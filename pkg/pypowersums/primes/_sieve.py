"""Least-prime-factor sieve with a trial division fallback."""

import logging
from math import isqrt

import numpy as np

from ._factorization import Factorization

logger = logging.getLogger(__name__)

_DEFAULT_SIEVE_LIMIT: int = 10**6


def trial_division(n: int) -> list[tuple[int, int]]:
    """
    Factor n by trial division over 2, 3 and the 6k +/- 1 wheel.

    Returns:
        (prime, exponent) pairs in increasing prime order
    """
    if n < 1:
        raise ValueError(f"Cannot factor {n}; n must be at least 1.")
    factors: list[tuple[int, int]] = []

    def _reduce(m: int, p: int) -> int:
        count = 0
        while m % p == 0:
            m //= p
            count += 1
        if count:
            factors.append((p, count))
        return m

    n = _reduce(n, 2)
    n = _reduce(n, 3)
    i = 5
    while i * i <= n:
        n = _reduce(n, i)
        n = _reduce(n, i + 2)
        i += 6
    if n > 1:
        factors.append((n, 1))
    return factors


class PrimeSieve:
    """Least prime factor table for 0..limit.

    The table is built once and never written afterwards, so one sieve can be
    shared by every caller in a process.

    Memory: O(limit)
    Lookup: O(1) per prime factor
    """

    def __init__(self, limit: int) -> None:
        """
        Build the table.

        Args:
            limit: Largest integer covered by the table (must be >= 1)

        Raises:
            ValueError: If limit < 1
        """
        if limit < 1:
            raise ValueError(f"Sieve limit must be at least 1, got {limit}.")

        lpf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, isqrt(limit) + 1):
            if lpf[p] == 0:
                multiples = lpf[p * p :: p]
                multiples[multiples == 0] = p
        unmarked = np.flatnonzero(lpf == 0)
        lpf[unmarked] = unmarked
        lpf.setflags(write=False)

        self._lpf = lpf
        self._limit = limit
        logger.debug("Built least prime factor sieve up to %d", limit)

    @property
    def limit(self) -> int:
        """Largest integer answered from the table."""
        return self._limit

    def least_prime_factor(self, n: int) -> int:
        """
        Smallest prime dividing n (n itself when n is 1 or prime).

        Raises:
            ValueError: If n is outside 1..limit
        """
        if not (1 <= n <= self._limit):
            raise ValueError(f"{n} is outside the sieve range (1, {self._limit}).")
        return int(self._lpf[n])

    def primes(self) -> list[int]:
        """All primes up to the limit, increasing."""
        candidates = np.arange(self._limit + 1)
        return [int(p) for p in np.flatnonzero((self._lpf == candidates) & (candidates >= 2))]

    def factorize(self, n: int) -> Factorization:
        """
        Canonical factorization of n; trial division past the table.

        Raises:
            ValueError: If n < 1
        """
        if n < 1:
            raise ValueError(f"Cannot factor {n}; n must be at least 1.")
        if n > self._limit:
            return Factorization(n, tuple(trial_division(n)))

        factors: list[tuple[int, int]] = []
        remaining = n
        while remaining > 1:
            p = int(self._lpf[remaining])
            count = 0
            while remaining % p == 0:
                remaining //= p
                count += 1
            factors.append((p, count))
        return Factorization(n, tuple(factors))


_shared: PrimeSieve | None = None


def shared_sieve(limit: int = _DEFAULT_SIEVE_LIMIT) -> PrimeSieve:
    """
    Process-wide sieve covering at least ``limit``.

    The cached sieve is replaced only when a larger limit is requested.
    """
    global _shared
    if _shared is None or _shared.limit < limit:
        _shared = PrimeSieve(max(limit, _DEFAULT_SIEVE_LIMIT))
    return _shared


def factorize(n: int, sieve: PrimeSieve | None = None) -> Factorization:
    """Canonical factorization of n using the given or the shared sieve."""
    if sieve is None:
        sieve = shared_sieve()
    return sieve.factorize(n)


def filtered_prime_sum(n: int, d: int, sieve: PrimeSieve | None = None) -> int:
    """
    Sum of n/p over the primes p dividing n with (p - 1) dividing d.

    Args:
        n: Integer whose prime divisors are summed over (n >= 1)
        d: Exponent the shifted primes must divide (d >= 1)

    Returns:
        The filtered sum, 0 when no prime qualifies

    Raises:
        ValueError: If n < 1 or d < 1
    """
    if d < 1:
        raise ValueError(f"Divisor filter d must be at least 1, got {d}.")
    return sum(n // p for p in factorize(n, sieve).primes if d % (p - 1) == 0)
