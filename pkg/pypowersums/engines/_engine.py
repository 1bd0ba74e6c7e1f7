"""Base class for power sum engines.

Every engine evaluates the same two sums, with the upper index excluded:
- S_k(n) = 1^k + 2^k + ... + (n-1)^k
- A_k(n) = (n-1)^k - (n-2)^k + (n-3)^k - ... +/- 1^k

A_k(n) is the alternating sum normalised so that its top term is positive,
which makes it positive for every n > 1.
"""

from abc import ABC, abstractmethod


class SumEngine(ABC):
    """Base class for power sum engine implementations.

    Engines are stateless; every method is a classmethod so the class itself
    can be handed to worker processes and registries.
    """

    @classmethod
    @abstractmethod
    def power_sum(cls, k: int, n: int) -> int:
        """
        Calculate S_k(n) exactly.

        Args:
            k: Exponent (k >= 1)
            n: Upper index, excluded from the sum (n >= 1)

        Returns:
            The sum of j**k for 1 <= j < n
        """
        pass

    @classmethod
    @abstractmethod
    def alternating_sum(cls, k: int, n: int) -> int:
        """
        Calculate A_k(n) exactly.

        Args:
            k: Exponent (k >= 1)
            n: Upper index, excluded from the sum (n >= 1)

        Returns:
            The alternating sum with positive top term, 0 when n == 1
        """
        pass

    @classmethod
    def power_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        """
        Calculate S_k(n) reduced into [0, modulus).

        The base implementation reduces the exact value; engines with a
        streaming path override it.
        """
        return cls.power_sum(k, n) % modulus

    @classmethod
    def alternating_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        """Calculate A_k(n) reduced into [0, modulus)."""
        return cls.alternating_sum(k, n) % modulus
