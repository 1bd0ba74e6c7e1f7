from ._query import PowerSumQuery
from ._exact import (
    ReducedFraction,
    exact_A,
    exact_S,
    exact_classical_ratio,
    exact_ratio,
    linear_alternating_sum,
    lower_bound,
    recurrence_step,
    signed_alternating_sum,
    signed_ratio,
)

__all__ = [
    "PowerSumQuery",
    "ReducedFraction",
    "exact_A",
    "exact_S",
    "exact_classical_ratio",
    "exact_ratio",
    "linear_alternating_sum",
    "lower_bound",
    "recurrence_step",
    "signed_alternating_sum",
    "signed_ratio",
]
