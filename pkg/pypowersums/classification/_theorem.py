"""Which ratios A_k(n+1)/A_k(n) are integers.

For k >= 1 and n > 1 the ratio is an integer exactly when
(a) n = 2, or (b) k = 1 and n is even, or (c) k is 1 or 2 and n = 3.
"""

from collections.abc import Iterator
from fractions import Fraction

from ..engines import LoopEngine, SumEngine
from ..sums import recurrence_step
from ._record import ClassificationRecord, Condition


def _require_ratio_index(k: int, n: int) -> None:
    if k < 1:
        raise ValueError(f"Exponent k must be at least 1, got {k}.")
    if n < 2:
        raise ValueError(f"Ratios need n >= 2, got n = {n}.")


def theorem_predicate(k: int, n: int) -> tuple[bool, Condition]:
    """
    Predicted integrality of A_k(n+1)/A_k(n).

    Returns:
        (True, first matching condition) or (False, Condition.NONE)

    Raises:
        ValueError: If k < 1 or n < 2
    """
    _require_ratio_index(k, n)
    if n == 2:
        return True, Condition.A
    if k == 1 and n % 2 == 0:
        return True, Condition.B
    if k in (1, 2) and n == 3:
        return True, Condition.C
    return False, Condition.NONE


def record_from_values(k: int, n: int, a_n: int, a_next: int) -> ClassificationRecord:
    """
    Build the record for (k, n) from A_k(n) and A_k(n+1).

    When the ratio is an integer and n > 2 the cofactor witness is the
    quotient n^k // A_k(n); callers confirm c * A_k(n) = n^k.
    """
    _, condition = theorem_predicate(k, n)
    ratio = Fraction(a_next, a_n)
    cofactor = None
    if ratio.denominator == 1 and n > 2:
        cofactor = n**k // a_n
    return ClassificationRecord(k, n, condition, ratio, cofactor)


def classify(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> ClassificationRecord:
    """
    Classify one pair against the exact ratio.

    Raises:
        ValueError: If k < 1 or n < 2
    """
    _require_ratio_index(k, n)
    a_n = engine.alternating_sum(k, n)
    return record_from_values(k, n, a_n, recurrence_step(k, n, a_n))


def theorem_row(
    k: int, n_min: int, n_max: int, engine: type[SumEngine] = LoopEngine
) -> Iterator[tuple[int, ClassificationRecord]]:
    """
    Records for (k, n_min) .. (k, n_max), carrying A_k(n) by recurrence.

    Yields:
        (A_k(n), record) for each n, in increasing n
    """
    _require_ratio_index(k, n_min)
    a_n = engine.alternating_sum(k, n_min)
    for n in range(n_min, n_max + 1):
        a_next = recurrence_step(k, n, a_n)
        yield a_n, record_from_values(k, n, a_n, a_next)
        a_n = a_next
