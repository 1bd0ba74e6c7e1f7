"""Scan kinds: how one k-row of a verification grid is evaluated.

Every record is a tuple of JSON-ready primitives (int, str, bool, None), so
reports serialise losslessly and compare equal after a round trip. Big values
are carried as decimal strings.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar

from ..classification import (
    KNOWN_HITS,
    kellner_row,
    quarter_square_parity_values,
    strict_inequality_values,
    theorem_row,
)
from ..congruences import halving_identity_values, lemma1_verdict, lemma2_verdict
from ..engines import SumEngine
from ..primes import shared_sieve
from ..sums import lower_bound, recurrence_step

Cell = int | str | bool | None
Record = tuple[Cell, ...]


@dataclass
class RowOutcome:
    """Records, violations and the count of cells skipped by hypothesis in one k-row."""

    records: list[Record] = field(default_factory=list)
    violations: list[Record] = field(default_factory=list)
    skipped: int = 0

    def add(self, record: Record, *, holds: bool) -> None:
        self.records.append(record)
        if not holds:
            self.violations.append(record)

    def skip(self) -> None:
        self.skipped += 1

    def merge(self, other: "RowOutcome") -> None:
        self.records.extend(other.records)
        self.violations.extend(other.violations)
        self.skipped += other.skipped


class Scan(ABC):
    """Base class for a grid scan kind.

    Scans are stateless; rows are evaluated independently so that any
    partition of the k-range over workers gives the same records.
    """

    name: ClassVar[str]
    csv_header: ClassVar[tuple[str, ...]]
    k_floor: ClassVar[int] = 1
    n_floor: ClassVar[int] = 1
    # False when records hold only hits rather than one entry per cell
    records_every_cell: ClassVar[bool] = True

    @classmethod
    def validate(cls, k_range: tuple[int, int], n_range: tuple[int, int]) -> None:
        """
        Check that an inclusive grid respects this scan's hypotheses.

        Raises:
            ValueError: If a range is empty or starts below the scan's floor
        """
        for label, (low, high), floor in (
            ("k", k_range, cls.k_floor),
            ("n", n_range, cls.n_floor),
        ):
            if low < floor:
                raise ValueError(
                    f"The {cls.name} scan needs {label} >= {floor}, got {label}-min = {low}."
                )
            if high < low:
                raise ValueError(f"Empty {label} range [{low}, {high}].")

    @classmethod
    def prepare(cls, n_range: tuple[int, int]) -> None:
        """Hook run once per worker process before any row."""

    @classmethod
    @abstractmethod
    def evaluate_row(
        cls, k: int, n_min: int, n_max: int, engine: type[SumEngine]
    ) -> RowOutcome:
        """
        Evaluate cells (k, n_min) .. (k, n_max).

        Returns:
            Records and violations in increasing n
        """
        pass


class TheoremScan(Scan):
    """Predicted against exact integrality of A_k(n+1)/A_k(n).

    A cell is also a violation when A_k(n) is not positive, falls below its
    lower bound, or a cofactor does not satisfy c * A_k(n) = n^k.
    """

    name = "theorem"
    csv_header = ("k", "n", "predicted", "actual", "condition", "ratio_num", "ratio_den")
    n_floor = 2

    @classmethod
    def evaluate_row(
        cls, k: int, n_min: int, n_max: int, engine: type[SumEngine]
    ) -> RowOutcome:
        outcome = RowOutcome()
        for a_n, record in theorem_row(k, n_min, n_max, engine):
            n = record.n
            holds = record.agrees and a_n > 0 and a_n >= lower_bound(n)
            if record.cofactor_witness is not None:
                holds = holds and record.cofactor_witness * a_n == n**k
            outcome.add(
                (
                    k,
                    n,
                    record.predicted_integer,
                    record.actual_integer,
                    record.matched_condition.value,
                    str(record.ratio.numerator),
                    str(record.ratio.denominator),
                ),
                holds=holds,
            )
        return outcome


class Lemma1Scan(Scan):
    """2 S_k(n) against its predicted class, S_k(n) carried as a running sum."""

    name = "lemma1"
    csv_header = ("k", "n", "modulus", "lhs", "rhs", "holds")
    k_floor = 2

    @classmethod
    def prepare(cls, n_range: tuple[int, int]) -> None:
        shared_sieve(n_range[1])

    @classmethod
    def evaluate_row(
        cls, k: int, n_min: int, n_max: int, engine: type[SumEngine]
    ) -> RowOutcome:
        outcome = RowOutcome()
        sieve = shared_sieve(n_max)
        s_n = engine.power_sum(k, n_min)
        for n in range(n_min, n_max + 1):
            verdict = lemma1_verdict(k, n, s_n, sieve)
            outcome.add(
                (k, n, verdict.modulus, verdict.lhs_residue, verdict.rhs_residue, verdict.holds),
                holds=verdict.holds,
            )
            s_n += n**k
        return outcome


class Lemma2Scan(Scan):
    """A_k(n) against its predicted class, A_k(n) carried by recurrence."""

    name = "lemma2"
    csv_header = ("k", "n", "modulus", "lhs", "rhs", "holds")
    k_floor = 2
    n_floor = 2

    @classmethod
    def evaluate_row(
        cls, k: int, n_min: int, n_max: int, engine: type[SumEngine]
    ) -> RowOutcome:
        outcome = RowOutcome()
        a_n = engine.alternating_sum(k, n_min)
        for n in range(n_min, n_max + 1):
            verdict = lemma2_verdict(k, n, a_n)
            outcome.add(
                (k, n, verdict.modulus, verdict.lhs_residue, verdict.rhs_residue, verdict.holds),
                holds=verdict.holds,
            )
            a_n = recurrence_step(k, n, a_n)
        return outcome


class KellnerScan(Scan):
    """Integer ratios of consecutive classical power sums.

    Only hits are recorded; a hit outside KNOWN_HITS is a violation.
    """

    name = "kellner"
    csv_header = ("k", "n", "ratio")
    n_floor = 3
    records_every_cell = False

    @classmethod
    def evaluate_row(
        cls, k: int, n_min: int, n_max: int, engine: type[SumEngine]
    ) -> RowOutcome:
        outcome = RowOutcome()
        for _, n, ratio in kellner_row(k, n_min, n_max, engine):
            outcome.add((k, n, str(ratio)), holds=(k, n) in KNOWN_HITS)
        return outcome


class IdentitiesScan(Scan):
    """Exact identities and proof steps, one record per applicable cell.

    Odd n: the halving identity, plus the reflection congruence when k is even.
    Odd k >= 3 with even n >= 4: the strict inequality A_k(n) > (n/2)^k
    together with the quarter-square parity step.
    Every other cell is outside all hypotheses and is skipped.
    """

    name = "identities"
    csv_header = ("k", "n", "halving", "reflection", "strict_inequality")
    k_floor = 2
    n_floor = 3

    @classmethod
    def evaluate_row(
        cls, k: int, n_min: int, n_max: int, engine: type[SumEngine]
    ) -> RowOutcome:
        outcome = RowOutcome()
        # power_sums[m] = S_k(m), alternating[m] = A_k(m) for 1 <= m <= n_max
        power_sums = {1: engine.power_sum(k, 1)}
        alternating = {1: engine.alternating_sum(k, 1)}
        for m in range(1, n_max):
            power_sums[m + 1] = power_sums[m] + m**k
            alternating[m + 1] = recurrence_step(k, m, alternating[m])

        for n in range(n_min, n_max + 1):
            a_n = alternating[n]
            if n % 2 == 1:
                halving = halving_identity_values(k, n, power_sums, a_n)
                reflection = (2 * a_n) % n == 0 if k % 2 == 0 else None
                outcome.add(
                    (k, n, halving, reflection, None),
                    holds=halving and reflection is not False,
                )
            elif k % 2 == 1 and n >= 4:
                strict = strict_inequality_values(k, n, a_n)
                strict = strict and quarter_square_parity_values(k, n, a_n)
                outcome.add((k, n, None, None, strict), holds=strict)
            else:
                outcome.skip()
        return outcome


SCAN_KINDS: dict[str, type[Scan]] = {
    scan.name: scan
    for scan in (TheoremScan, Lemma1Scan, Lemma2Scan, KellnerScan, IdentitiesScan)
}
