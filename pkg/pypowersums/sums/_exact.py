"""Exact evaluation of power sums, alternating power sums and their ratios.

All values are Python integers and all ratios are ``fractions.Fraction``,
which is always held in lowest terms with a positive denominator, so a ratio
is an integer exactly when its denominator is 1.
"""

from fractions import Fraction

from ..engines import LoopEngine, SumEngine
from ._query import PowerSumQuery

# A ratio in lowest terms with positive denominator.
ReducedFraction = Fraction


def _require_ratio_index(k: int, n: int) -> None:
    if k < 1:
        raise ValueError(f"Exponent k must be at least 1, got {k}.")
    if n < 2:
        raise ValueError(f"Ratios need n >= 2 (the denominator vanishes at n = 1), got n = {n}.")


def exact_S(q: PowerSumQuery, engine: type[SumEngine] = LoopEngine) -> int:
    """
    Calculate S_k(n) = 1^k + ... + (n-1)^k.

    Args:
        q: The (k, n) pair
        engine: Summation strategy

    Returns:
        The exact sum, 0 for n == 1
    """
    return engine.power_sum(q.k, q.n)


def exact_A(q: PowerSumQuery, engine: type[SumEngine] = LoopEngine) -> int:
    """
    Calculate A_k(n) = (-1)^n * sum_{j<n} (-1)^(j+1) j^k.

    Args:
        q: The (k, n) pair
        engine: Summation strategy

    Returns:
        The exact alternating sum, 0 for n == 1 and positive for n > 1
    """
    return engine.alternating_sum(q.k, q.n)


def recurrence_step(k: int, n: int, a_n: int) -> int:
    """Advance A_k(n) to A_k(n+1) = n^k - A_k(n)."""
    return n**k - a_n


def exact_ratio(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> ReducedFraction:
    """
    Reduced ratio A_k(n+1)/A_k(n).

    Raises:
        ValueError: If k < 1 or n < 2
    """
    _require_ratio_index(k, n)
    a_n = engine.alternating_sum(k, n)
    return Fraction(recurrence_step(k, n, a_n), a_n)


def exact_classical_ratio(
    k: int, n: int, engine: type[SumEngine] = LoopEngine
) -> ReducedFraction:
    """
    Reduced ratio S_k(n+1)/S_k(n).

    Raises:
        ValueError: If k < 1 or n < 2
    """
    _require_ratio_index(k, n)
    s_n = engine.power_sum(k, n)
    return Fraction(s_n + n**k, s_n)


def signed_alternating_sum(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> int:
    """
    The alternating sum as usually written, 1^k - 2^k + ... + (-1)^(n+1) n^k.

    Equals (-1)^(n+1) * A_k(n+1).
    """
    PowerSumQuery(k, n)
    sign = 1 if n % 2 == 1 else -1
    return sign * engine.alternating_sum(k, n + 1)


def signed_ratio(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> ReducedFraction:
    """
    Ratio of consecutive alternating sums in their usual sign convention.

    (1^k - ... + (-1)^(n+1) n^k) / (1^k - ... + (-1)^n (n-1)^k) = -A_k(n+1)/A_k(n)
    """
    return -exact_ratio(k, n, engine)


def linear_alternating_sum(n: int) -> int:
    """Closed form A_1(n) = floor(n/2)."""
    PowerSumQuery(1, n)
    return n // 2


def lower_bound(n: int) -> int:
    """Lower bound on A_k(n) for every k: (n-1)/2 for odd n, n/2 for even n."""
    PowerSumQuery(1, n)
    return (n - 1) // 2 if n % 2 == 1 else n // 2
