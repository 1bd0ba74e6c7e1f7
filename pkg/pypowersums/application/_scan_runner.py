"""Deterministic parallel evaluation of verification grids."""

import logging
import multiprocessing
import os
import time
from math import ceil

from ..engines import LoopEngine, SumEngine
from ._scan_report import ScanReport
from ._scans import SCAN_KINDS, Record, RowOutcome, Scan

logger = logging.getLogger(__name__)

_JOBS_ENV_VAR: str = "PYPOWERSUMS_JOBS"
_CHUNKS_PER_WORKER: int = 4

_Task = tuple[type[Scan], tuple[int, ...], tuple[int, int], type[SumEngine]]


def default_worker_count() -> int:
    """
    Worker count from PYPOWERSUMS_JOBS, else the number of CPUs.

    Raises:
        ValueError: If the variable is set but not a positive integer
    """
    value = os.environ.get(_JOBS_ENV_VAR)
    if value is None:
        return os.cpu_count() or 1
    try:
        jobs = int(value)
    except ValueError:
        jobs = 0
    if jobs < 1:
        raise ValueError(f"{_JOBS_ENV_VAR} must be a positive integer, got '{value}'.")
    return jobs


def _prepare_worker(scan: type[Scan], n_range: tuple[int, int]) -> None:
    scan.prepare(n_range)


def _evaluate_chunk(task: _Task) -> RowOutcome:
    scan, rows, (n_min, n_max), engine = task
    merged = RowOutcome()
    for k in rows:
        merged.merge(scan.evaluate_row(k, n_min, n_max, engine))
    return merged


def _cell_key(record: Record) -> tuple[int, int]:
    k, n = record[0], record[1]
    assert isinstance(k, int) and isinstance(n, int)
    return k, n


class ScanRunner:
    """Runs grid scans over a fixed pool of worker processes.

    The k-range is cut into contiguous row chunks; each chunk is evaluated
    independently and the coordinator sorts the merged records by (k, n), so
    the report does not depend on the worker count.
    """

    def __init__(self, workers: int | None = None) -> None:
        """
        Initialize the runner.

        Args:
            workers: Number of worker processes; defaults to default_worker_count()

        Raises:
            ValueError: If workers < 1
        """
        if workers is None:
            workers = default_worker_count()
        if workers < 1:
            raise ValueError(f"Worker count must be at least 1, got {workers}.")
        self._workers = workers

    @property
    def workers(self) -> int:
        return self._workers

    def _chunks(self, k_range: tuple[int, int]) -> list[tuple[int, ...]]:
        rows = list(range(k_range[0], k_range[1] + 1))
        size = max(1, ceil(len(rows) / (self._workers * _CHUNKS_PER_WORKER)))
        return [tuple(rows[i : i + size]) for i in range(0, len(rows), size)]

    def run(
        self,
        kind: str,
        k_range: tuple[int, int],
        n_range: tuple[int, int],
        engine: type[SumEngine] = LoopEngine,
    ) -> ScanReport:
        """
        Evaluate every cell of the inclusive grid exactly once.

        Args:
            kind: Scan kind name (theorem, lemma1, lemma2, kellner, identities)
            k_range: Inclusive exponent range
            n_range: Inclusive upper index range
            engine: Summation engine used to seed each row

        Returns:
            The report, records and violations sorted by (k, n)

        Raises:
            ValueError: If the kind is unknown or the ranges break its hypotheses
            RuntimeError: If records plus skipped cells do not cover the grid
        """
        if kind not in SCAN_KINDS:
            raise ValueError(f"Unknown scan kind '{kind}'; expected one of {sorted(SCAN_KINDS)}.")
        scan = SCAN_KINDS[kind]
        scan.validate(k_range, n_range)

        chunks = self._chunks(k_range)
        tasks: list[_Task] = [(scan, rows, n_range, engine) for rows in chunks]
        workers = min(self._workers, len(chunks))
        logger.info(
            "Scanning %s over k in [%d, %d], n in [%d, %d] with %d worker(s)",
            kind, *k_range, *n_range, workers,
        )

        started = time.perf_counter()
        merged = RowOutcome()

        def collect(done: int, outcome: RowOutcome) -> None:
            merged.merge(outcome)
            logger.info("Finished chunk %d/%d", done, len(chunks))

        if workers == 1:
            _prepare_worker(scan, n_range)
            for done, task in enumerate(tasks, start=1):
                collect(done, _evaluate_chunk(task))
        else:
            with multiprocessing.Pool(
                processes=workers, initializer=_prepare_worker, initargs=(scan, n_range)
            ) as pool:
                outcomes = pool.imap_unordered(_evaluate_chunk, tasks)
                for done, outcome in enumerate(outcomes, start=1):
                    collect(done, outcome)

        elapsed = time.perf_counter() - started
        records = sorted(merged.records, key=_cell_key)
        violations = sorted(merged.violations, key=_cell_key)
        grid_size = (k_range[1] - k_range[0] + 1) * (n_range[1] - n_range[0] + 1)
        if scan.records_every_cell and len(records) + merged.skipped != grid_size:
            raise RuntimeError(
                f"The {kind} scan covered {len(records)} record(s) and {merged.skipped} "
                f"skipped cell(s) of a {grid_size}-cell grid."
            )
        logger.info(
            "%s scan: %d record(s), %d skipped, %d violation(s) in %.3f s",
            kind, len(records), merged.skipped, len(violations), elapsed,
        )
        return ScanReport(
            scan_kind=kind,
            k_range=k_range,
            n_range=n_range,
            records=records,
            violations=violations,
            skipped=merged.skipped,
            elapsed_seconds=elapsed,
            worker_count=workers,
        )


def run_scan(
    kind: str,
    k_range: tuple[int, int],
    n_range: tuple[int, int],
    workers: int | None = None,
    engine: type[SumEngine] = LoopEngine,
) -> ScanReport:
    """Run one grid scan; see ScanRunner.run."""
    return ScanRunner(workers).run(kind, k_range, n_range, engine)
