"""Classification records for the integer ratio problem."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Condition(Enum):
    """Which integrality condition a pair (k, n) satisfies, first match wins.

    A: n = 2
    B: k = 1 and n even
    C: k in {1, 2} and n = 3
    """

    A = "A"
    B = "B"
    C = "C"
    NONE = "NONE"


@dataclass(frozen=True)
class ClassificationRecord:
    """Predicted and observed integrality of A_k(n+1)/A_k(n) for one pair.

    Attributes:
        k: Exponent
        n: Upper index (n >= 2)
        matched_condition: First integrality condition satisfied, or NONE
        ratio: A_k(n+1)/A_k(n) in lowest terms
        cofactor_witness: Quotient n^k // A_k(n), present when the ratio is
            an integer and n > 2
    """

    k: int
    n: int
    matched_condition: Condition
    ratio: Fraction
    cofactor_witness: int | None = None

    @property
    def predicted_integer(self) -> bool:
        return self.matched_condition is not Condition.NONE

    @property
    def actual_integer(self) -> bool:
        return self.ratio.denominator == 1

    @property
    def agrees(self) -> bool:
        """Whether prediction and exact integrality coincide."""
        return self.predicted_integer == self.actual_integer
