"""Grid scan orchestration and reports."""

from ._scans import SCAN_KINDS, RowOutcome, Scan
from ._scan_report import ScanReport, emit_report
from ._scan_runner import ScanRunner, default_worker_count, run_scan

__all__ = [
    "SCAN_KINDS",
    "RowOutcome",
    "Scan",
    "ScanReport",
    "ScanRunner",
    "default_worker_count",
    "emit_report",
    "run_scan",
]
