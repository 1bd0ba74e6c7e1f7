"""Numerical checks of the individual steps that rule out other integer ratios."""

from ..engines import LoopEngine, SumEngine


def power_of_three_obstruction(k: int) -> int | None:
    """
    Solve 2^k - 1 = 3^m for a positive m.

    Uses repeated exact division by 3.

    Returns:
        m when a solution exists (only k = 2 gives one), None otherwise

    Raises:
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"Exponent k must be at least 1, got {k}.")
    value = 2**k - 1
    m = 0
    while value % 3 == 0:
        value //= 3
        m += 1
    if value == 1 and m >= 1:
        return m
    return None


# Powers of 3 modulo 8 alternate between 1 and 3.
_POWERS_OF_THREE_MOD_8 = frozenset({1, 3})


def mersenne_mod8_obstruction(k: int) -> bool:
    """
    Whether 2^k - 1 = 3^m is ruled out modulo 8.

    True for every k >= 3, where 2^k - 1 = 7 (mod 8).

    Raises:
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"Exponent k must be at least 1, got {k}.")
    return (pow(2, k, 8) - 1) % 8 not in _POWERS_OF_THREE_MOD_8


def _require_odd_k_even_n(k: int, n: int) -> None:
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and at least 3, got {k}.")
    if n < 4 or n % 2 == 1:
        raise ValueError(f"n must be even and at least 4, got {n}.")


def strict_inequality_values(k: int, n: int, a_n: int) -> bool:
    """Whether a_n, taken as A_k(n), exceeds (n/2)^k."""
    return a_n > (n // 2) ** k


def strict_inequality_check(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> bool:
    """
    Whether A_k(n) > (n/2)^k for odd k >= 3 and even n >= 4.

    Raises:
        ValueError: If k or n fall outside those parities
    """
    _require_odd_k_even_n(k, n)
    return strict_inequality_values(k, n, engine.alternating_sum(k, n))


def quarter_square_parity_values(k: int, n: int, a_n: int) -> bool:
    """Whether n^2/4 divides a_n, taken as A_k(n), with an odd quotient."""
    quotient, remainder = divmod(a_n, (n // 2) ** 2)
    return remainder == 0 and quotient % 2 == 1


def quarter_square_parity_check(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> bool:
    """
    Whether A_k(n) / (n^2/4) is an odd integer for odd k >= 3 and even n >= 4.

    Any cofactor c with c * A_k(n) = n^k is then divisible by 2^k.

    Raises:
        ValueError: If k or n fall outside those parities
    """
    _require_odd_k_even_n(k, n)
    return quarter_square_parity_values(k, n, engine.alternating_sum(k, n))
