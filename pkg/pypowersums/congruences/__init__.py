from ._verdict import CongruenceVerdict
from ._lemmas import (
    fermat_filter_check,
    halving_identity_check,
    halving_identity_values,
    lemma1_check,
    lemma1_predict,
    lemma1_verdict,
    lemma2_check,
    lemma2_predict,
    lemma2_verdict,
    reflection_check,
)

__all__ = [
    "CongruenceVerdict",
    "fermat_filter_check",
    "halving_identity_check",
    "halving_identity_values",
    "lemma1_check",
    "lemma1_predict",
    "lemma1_verdict",
    "lemma2_check",
    "lemma2_predict",
    "lemma2_verdict",
    "reflection_check",
]
