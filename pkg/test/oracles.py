"""Naive reference implementations, written independently of the package."""


def naive_power(base: int, exponent: int) -> int:
    result = 1
    for _ in range(exponent):
        result *= base
    return result


def naive_S(k: int, n: int) -> int:
    total = 0
    j = 1
    while j <= n - 1:
        total += naive_power(j, k)
        j += 1
    return total


def naive_A(k: int, n: int) -> int:
    """(-1)^n * sum_{j=1}^{n-1} (-1)^(j+1) j^k, taken literally."""
    inner = 0
    for j in range(1, n):
        inner += naive_power(-1, j + 1) * naive_power(j, k)
    return naive_power(-1, n) * inner


def naive_factor(n: int) -> list[tuple[int, int]]:
    factors = []
    d = 2
    while n > 1:
        count = 0
        while n % d == 0:
            n //= d
            count += 1
        if count:
            factors.append((d, count))
        d += 1
    return factors


def naive_is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, n))
