"""Search for integer ratios of consecutive classical power sums."""

import logging

from ..engines import LoopEngine, SumEngine

logger = logging.getLogger(__name__)

# Every integer ratio S_k(n+1)/S_k(n) with n >= 3 is expected to be one of these.
KNOWN_HITS: frozenset[tuple[int, int]] = frozenset({(1, 3), (3, 3)})


def kellner_row(
    k: int, n_min: int, n_max: int, engine: type[SumEngine] = LoopEngine
) -> list[tuple[int, int, int]]:
    """
    Integer ratios S_k(n+1)/S_k(n) for n_min <= n <= n_max.

    S_k(n) is carried with S_k(n+1) = S_k(n) + n^k.

    Returns:
        (k, n, ratio) for every integer ratio, in increasing n

    Raises:
        ValueError: If k < 1 or n_min < 2
    """
    if k < 1:
        raise ValueError(f"Exponent k must be at least 1, got {k}.")
    if n_min < 2:
        raise ValueError(f"Ratios need n >= 2, got n = {n_min}.")
    hits = []
    s_n = engine.power_sum(k, n_min)
    for n in range(n_min, n_max + 1):
        s_next = s_n + n**k
        quotient, remainder = divmod(s_next, s_n)
        if remainder == 0:
            hits.append((k, n, quotient))
        s_n = s_next
    return hits


def kellner_scan(
    k_max: int, n_max: int, engine: type[SumEngine] = LoopEngine
) -> list[tuple[int, int, int]]:
    """
    All integer ratios S_k(n+1)/S_k(n) with 1 <= k <= k_max and 3 <= n <= n_max.

    Returns:
        (k, n, ratio) hits ordered by (k, n)

    Raises:
        ValueError: If k_max < 1 or n_max < 3
    """
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}.")
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}.")
    hits = []
    for k in range(1, k_max + 1):
        hits.extend(kellner_row(k, 3, n_max, engine))
    unexpected = [(k, n) for k, n, _ in hits if (k, n) not in KNOWN_HITS]
    if unexpected:
        logger.warning("Integer classical ratios outside the known pairs: %s", unexpected)
    return hits
