"""Scan reports and their JSON and CSV forms."""

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ._scans import SCAN_KINDS, Record


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one grid scan.

    Attributes:
        scan_kind: Name of the scan kind (see SCAN_KINDS)
        k_range: Inclusive (min, max) exponent range
        n_range: Inclusive (min, max) upper index range
        records: Records sorted by (k, n)
        violations: Records whose checked property failed, sorted by (k, n)
        skipped: Cells outside the scan's hypotheses, counted by the scan
            (0 for kellner, which records hits only)
        elapsed_seconds: Wall clock time of the scan
        worker_count: Number of worker processes used
    """

    scan_kind: str
    k_range: tuple[int, int]
    n_range: tuple[int, int]
    records: list[Record] = field(default_factory=list)
    violations: list[Record] = field(default_factory=list)
    skipped: int = 0
    elapsed_seconds: float = 0.0
    worker_count: int = 1

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def grid_size(self) -> int:
        return (self.k_range[1] - self.k_range[0] + 1) * (self.n_range[1] - self.n_range[0] + 1)

    def to_dict(self) -> dict:
        return {
            "scan_kind": self.scan_kind,
            "k_range": list(self.k_range),
            "n_range": list(self.n_range),
            "records": [list(record) for record in self.records],
            "violations": [list(record) for record in self.violations],
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "worker_count": self.worker_count,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ScanReport":
        """
        Parse a report written by to_json.

        The JSON form does not carry the skipped count; it is recovered from
        the grid, which a runner-produced report always covers exactly.

        Raises:
            ValueError: If the text is not a report
        """
        try:
            data = json.loads(text)
            kind = data["scan_kind"]
            k_range = tuple(data["k_range"])
            n_range = tuple(data["n_range"])
            records = [tuple(record) for record in data["records"]]
            skipped = 0
            if SCAN_KINDS[kind].records_every_cell:
                grid_size = (k_range[1] - k_range[0] + 1) * (n_range[1] - n_range[0] + 1)
                skipped = grid_size - len(records)
            return cls(
                scan_kind=kind,
                k_range=k_range,
                n_range=n_range,
                records=records,
                violations=[tuple(record) for record in data["violations"]],
                skipped=skipped,
                elapsed_seconds=float(data["elapsed_seconds"]),
                worker_count=int(data["worker_count"]),
            )
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ValueError(f"Not a scan report: {exc}") from exc

    def to_csv(self) -> str:
        """Header line plus one row per record; booleans as true/false, None empty."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(SCAN_KINDS[self.scan_kind].csv_header)
        for record in self.records:
            writer.writerow([_csv_cell(cell) for cell in record])
        return buffer.getvalue()


def _csv_cell(cell: object) -> str:
    if cell is None:
        return ""
    if isinstance(cell, bool):
        return "true" if cell else "false"
    return str(cell)


def emit_report(
    report: ScanReport, report_format: str = "json", destination: Path | None = None
) -> None:
    """
    Write a report as JSON or CSV.

    Args:
        report: The report to write
        report_format: "json" or "csv"
        destination: File to write, or None for standard output

    Raises:
        ValueError: If the format is unknown
        OSError: If the destination cannot be written (message names the path)
    """
    if report_format == "json":
        text = report.to_json() + "\n"
    elif report_format == "csv":
        text = report.to_csv()
    else:
        raise ValueError(f"Unknown report format '{report_format}'; expected 'json' or 'csv'.")

    if destination is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        destination.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"Cannot write report to '{destination}': {exc.strerror or exc}") from exc
