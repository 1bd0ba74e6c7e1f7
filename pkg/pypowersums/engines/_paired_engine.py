"""Paired-term engine for alternating power sums."""

from ._engine import SumEngine


class PairedEngine(SumEngine):
    """Evaluates A_k(n) by grouping consecutive terms into positive differences.

    For even n:
        A_k(n) = 1 + sum_{j=1}^{(n-2)/2} ((2j+1)^k - (2j)^k)
    For odd n:
        A_k(n) = sum_{j=1}^{(n-1)/2} ((2j)^k - (2j-1)^k)

    Every partial sum is non-negative, so the running total never changes sign.
    Results are bit-identical to LoopEngine.
    """

    @classmethod
    def power_sum(cls, k: int, n: int) -> int:
        return sum(j**k for j in range(1, n))

    @classmethod
    def _pairs(cls, n: int) -> list[tuple[int, int]]:
        """(larger, smaller) bases of each positive difference."""
        if n % 2 == 0:
            return [(2 * j + 1, 2 * j) for j in range(1, (n - 2) // 2 + 1)]
        return [(2 * j, 2 * j - 1) for j in range(1, (n - 1) // 2 + 1)]

    @classmethod
    def alternating_sum(cls, k: int, n: int) -> int:
        if n == 1:
            return 0
        total = 1 if n % 2 == 0 else 0
        for high, low in cls._pairs(n):
            total += high**k - low**k
        return total

    @classmethod
    def alternating_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        if n == 1:
            return 0
        total = (1 if n % 2 == 0 else 0) % modulus
        for high, low in cls._pairs(n):
            total = (total + pow(high, k, modulus) - pow(low, k, modulus)) % modulus
        return total
