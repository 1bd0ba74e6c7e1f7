from ._record import ClassificationRecord, Condition
from ._theorem import classify, record_from_values, theorem_predicate, theorem_row
from ._proof_steps import (
    mersenne_mod8_obstruction,
    power_of_three_obstruction,
    quarter_square_parity_check,
    quarter_square_parity_values,
    strict_inequality_check,
    strict_inequality_values,
)
from ._kellner import KNOWN_HITS, kellner_row, kellner_scan

__all__ = [
    "ClassificationRecord",
    "Condition",
    "KNOWN_HITS",
    "classify",
    "kellner_row",
    "kellner_scan",
    "mersenne_mod8_obstruction",
    "power_of_three_obstruction",
    "quarter_square_parity_check",
    "quarter_square_parity_values",
    "record_from_values",
    "strict_inequality_check",
    "strict_inequality_values",
    "theorem_predicate",
    "theorem_row",
]
