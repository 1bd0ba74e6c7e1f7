import numpy as np

from ._engine import SumEngine


class NumpyEngine(SumEngine):
    """Numpy implementation.

    Exact sums run over object arrays holding Python integers, so there is no
    overflow. Residues are vectorised on int64 when every product of two
    residues fits, i.e. for moduli below 2**31; larger moduli fall back to the
    exact reduction.
    """

    # products of two residues must stay below 2**63
    _MAX_VECTOR_MODULUS = 2**31

    @classmethod
    def _terms(cls, k: int, n: int) -> np.ndarray:
        return np.array(range(1, n), dtype=object) ** k

    @classmethod
    def _alternate(cls, terms: np.ndarray) -> int:
        # reversed so the top term sits at index 0 with a positive sign
        descending = terms[::-1]
        return int(descending[0::2].sum()) - int(descending[1::2].sum())

    @classmethod
    def _residues(cls, k: int, n: int, modulus: int) -> np.ndarray:
        base = np.arange(1, n, dtype=np.int64) % modulus
        result = np.full(base.shape, 1 % modulus, dtype=np.int64)
        exponent = k
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    @classmethod
    def power_sum(cls, k: int, n: int) -> int:
        return int(cls._terms(k, n).sum())

    @classmethod
    def alternating_sum(cls, k: int, n: int) -> int:
        return cls._alternate(cls._terms(k, n))

    @classmethod
    def power_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        if modulus >= cls._MAX_VECTOR_MODULUS:
            return super().power_sum_mod(k, n, modulus)
        return int(cls._residues(k, n, modulus).sum()) % modulus

    @classmethod
    def alternating_sum_mod(cls, k: int, n: int, modulus: int) -> int:
        if modulus >= cls._MAX_VECTOR_MODULUS:
            return super().alternating_sum_mod(k, n, modulus)
        return cls._alternate(cls._residues(k, n, modulus)) % modulus
