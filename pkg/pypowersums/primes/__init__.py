from ._factorization import Factorization
from ._sieve import PrimeSieve, factorize, filtered_prime_sum, shared_sieve, trial_division

__all__ = [
    "Factorization",
    "PrimeSieve",
    "factorize",
    "filtered_prime_sum",
    "shared_sieve",
    "trial_division",
]
