from ._engine import SumEngine


class LoopEngine(SumEngine):
    """Term-by-term implementation.

    Each term is raised with Python's square-and-multiply ``pow``. The modular
    path reduces every term as it goes, so intermediate values stay below the
    modulus squared.
    """

    @classmethod
    def _sign(cls, j: int, n: int) -> int:
        # top term (j = n - 1) is positive
        return 1 if (n - 1 - j) % 2 == 0 else -1

    @classmethod
    def power_sum(cls, k: int, n: int) -> int:
        total = 0
        for j in range(1, n):
            total += j**k
        return total

    @classmethod
    def alternating_sum(cls, k: int, n: int) -> int:
        total = 0
        for j in range(1, n):
            total += cls._sign(j, n) * j**k
        return total

    @classmethod
    def power_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        total = 0
        for j in range(1, n):
            total = (total + pow(j, k, modulus)) % modulus
        return total

    @classmethod
    def alternating_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        total = 0
        for j in range(1, n):
            total = (total + cls._sign(j, n) * pow(j, k, modulus)) % modulus
        return total
