"""Congruences satisfied by power sums, as checkable oracles.

Each ``*_predict`` returns the modulus and the residue a congruence claims;
each ``*_check`` also computes the observed residue from the sum itself and
returns a CongruenceVerdict. Residues are always normalised into
[0, modulus) before they are compared.

Left-hand sides come from exact sums for n <= _EXACT_LIMIT and from the
engine's streaming modular path above it.
"""

from ..engines import LoopEngine, SumEngine
from ..primes import PrimeSieve, factorize, filtered_prime_sum
from ..sums import PowerSumQuery
from ._verdict import CongruenceVerdict

_EXACT_LIMIT: int = 1000


def _require_exponent_above_one(k: int) -> None:
    if k <= 1:
        raise ValueError(
            f"The congruence needs k > 1, got k = {k}; use A_1(n) = floor(n/2) instead."
        )


def lemma1_predict(k: int, n: int, sieve: PrimeSieve | None = None) -> tuple[int, int]:
    """
    Predicted class of 2 S_k(n).

    Even k: -2 * sum_{p | n, (p-1) | k} n/p        (mod 2n)
    Odd k:  -k n * sum_{p | n, (p-1) | (k-1)} n/p   (mod n^2)

    Returns:
        (modulus, residue) with the residue in [0, modulus)

    Raises:
        ValueError: If k <= 1 or n < 1
    """
    _require_exponent_above_one(k)
    PowerSumQuery(k, n)
    if k % 2 == 0:
        modulus = 2 * n
        return modulus, (-2 * filtered_prime_sum(n, k, sieve)) % modulus
    modulus = n * n
    return modulus, (-k * n * filtered_prime_sum(n, k - 1, sieve)) % modulus


def lemma1_verdict(
    k: int, n: int, power_sum: int, sieve: PrimeSieve | None = None
) -> CongruenceVerdict:
    """Compare 2 * power_sum, taken as S_k(n), with the predicted class."""
    modulus, rhs = lemma1_predict(k, n, sieve)
    return CongruenceVerdict.compare(modulus, 2 * power_sum, rhs)


def lemma1_check(
    k: int, n: int, engine: type[SumEngine] = LoopEngine, sieve: PrimeSieve | None = None
) -> CongruenceVerdict:
    """Verdict for 2 S_k(n) against its predicted class."""
    modulus, rhs = lemma1_predict(k, n, sieve)
    if n <= _EXACT_LIMIT:
        lhs = 2 * engine.power_sum(k, n)
    else:
        lhs = 2 * engine.power_sum_mod(k, n, modulus)
    return CongruenceVerdict.compare(modulus, lhs, rhs)


def lemma2_predict(k: int, n: int) -> tuple[int, int]:
    """
    Predicted class of A_k(n).

    k even, n odd:  0 (mod n(n-1)/2)
    k even, n even: 0 (mod n-1)
    k odd:          floor(n/2)^2 (mod 2 floor(n/2)^2)

    Raises:
        ValueError: If k <= 1 or n <= 1
    """
    _require_exponent_above_one(k)
    if n <= 1:
        raise ValueError(f"The congruence needs n > 1, got n = {n}.")
    if k % 2 == 1:
        square = (n // 2) ** 2
        return 2 * square, square
    if n % 2 == 1:
        return n * (n - 1) // 2, 0
    return n - 1, 0


def lemma2_verdict(k: int, n: int, alternating_sum: int) -> CongruenceVerdict:
    """Compare alternating_sum, taken as A_k(n), with the predicted class."""
    modulus, rhs = lemma2_predict(k, n)
    return CongruenceVerdict.compare(modulus, alternating_sum, rhs)


def lemma2_check(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> CongruenceVerdict:
    """Verdict for A_k(n) against its predicted class."""
    modulus, rhs = lemma2_predict(k, n)
    if n <= _EXACT_LIMIT:
        lhs = engine.alternating_sum(k, n)
    else:
        lhs = engine.alternating_sum_mod(k, n, modulus)
    return CongruenceVerdict.compare(modulus, lhs, rhs)


def _require_odd_index(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}.")


def halving_identity_values(
    k: int, n: int, power_sums: dict[int, int], alternating_sum: int
) -> bool:
    """
    Exact identity for odd n, from already known sums:

        A_k(n) = 2^(k+1) S_k((n-1)/2) - S_k(n-1) + (n-1)^k

    Args:
        power_sums: Maps m to S_k(m); must hold (n-1)/2 and n-1
        alternating_sum: A_k(n)
    """
    half = (n - 1) // 2
    rhs = 2 ** (k + 1) * power_sums[half] - power_sums[n - 1] + (n - 1) ** k
    return alternating_sum == rhs


def halving_identity_check(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> bool:
    """
    Whether the even terms of A_k(n) rebuild it exactly, for odd n >= 3.

    Raises:
        ValueError: If k <= 1 or n is even or below 3
    """
    _require_exponent_above_one(k)
    _require_odd_index(n)
    half = (n - 1) // 2
    power_sums = {half: engine.power_sum(k, half), n - 1: engine.power_sum(k, n - 1)}
    return halving_identity_values(k, n, power_sums, engine.alternating_sum(k, n))


def reflection_check(k: int, n: int, engine: type[SumEngine] = LoopEngine) -> bool:
    """
    Whether 2 A_k(n) = 0 (mod n) for even k and odd n >= 3.

    Pairing j with n - j flips every sign while leaving j^k unchanged mod n.

    Raises:
        ValueError: If k is odd or n is even or below 3
    """
    if k < 2 or k % 2 == 1:
        raise ValueError(f"k must be even and at least 2, got {k}.")
    _require_odd_index(n)
    return engine.alternating_sum_mod(k, n, n) * 2 % n == 0


def fermat_filter_check(k: int, p: int) -> bool:
    """
    Whether the odd prime p, with (p - 1) | k, divides 2^k - 1.

    Raises:
        ValueError: If p is not an odd prime or (p - 1) does not divide k
    """
    if k < 1:
        raise ValueError(f"Exponent k must be at least 1, got {k}.")
    if p < 3 or p % 2 == 0 or factorize(p).factors != ((p, 1),):
        raise ValueError(f"p must be an odd prime, got {p}.")
    if k % (p - 1) != 0:
        raise ValueError(f"(p - 1) = {p - 1} does not divide k = {k}.")
    return pow(2, k, p) == 1
