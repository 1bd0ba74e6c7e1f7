"""Addressing a single power sum instance."""

from dataclasses import dataclass


@dataclass(frozen=True)
class PowerSumQuery:
    """A pair (k, n) naming S_k(n) or A_k(n).

    Attributes:
        k: Exponent, k >= 1
        n: Upper index (excluded from the sum), n >= 1

    Raises:
        ValueError: If k < 1 or n < 1
    """

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"Exponent k must be at least 1, got {self.k}.")
        if self.n < 1:
            raise ValueError(f"Upper index n must be at least 1, got {self.n}.")
