"""Canonical prime factorizations."""

from dataclasses import dataclass
from math import prod


@dataclass(frozen=True)
class Factorization:
    """An integer together with its prime factorization.

    Attributes:
        value: The factored integer (>= 1)
        factors: (prime, exponent) pairs with strictly increasing primes and
            exponents >= 1; empty for value == 1

    Raises:
        ValueError: If the factors are not canonical or do not multiply to value
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"Only positive integers have a factorization, got {self.value}.")
        primes = [p for p, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError(f"Primes must be strictly increasing, got {primes}.")
        if any(e < 1 for _, e in self.factors):
            raise ValueError(f"Exponents must be at least 1, got {self.factors}.")
        if self.product() != self.value:
            raise ValueError(f"Factors {self.factors} do not multiply to {self.value}.")

    @property
    def primes(self) -> list[int]:
        """Distinct prime divisors in increasing order."""
        return [p for p, _ in self.factors]

    def product(self) -> int:
        """Multiply the factorization back out."""
        return prod(p**e for p, e in self.factors)
