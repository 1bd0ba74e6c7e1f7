import dataclasses

import pytest

from pypowersums.application import RowOutcome, ScanRunner, default_worker_count, run_scan
from pypowersums.application._scans import IdentitiesScan
from pypowersums.engines import NumpyEngine, PairedEngine


def outcome(report):
    return dataclasses.replace(report, elapsed_seconds=0.0, worker_count=1)


class TestDefaultWorkerCount:
    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("PYPOWERSUMS_JOBS", "3")

        assert default_worker_count() == 3

    def test_falls_back_to_cpu_count(self, monkeypatch):
        monkeypatch.delenv("PYPOWERSUMS_JOBS", raising=False)

        assert default_worker_count() >= 1

    @pytest.mark.parametrize("value", ["0", "-2", "many"])
    def test_rejects_bad_values(self, monkeypatch, value):
        monkeypatch.setenv("PYPOWERSUMS_JOBS", value)

        with pytest.raises(ValueError, match="PYPOWERSUMS_JOBS must be a positive integer"):
            default_worker_count()


class TestScanRunner:
    def test_rejects_zero_workers(self):
        with pytest.raises(ValueError, match="Worker count must be at least 1"):
            ScanRunner(0)

    def test_chunks_are_contiguous_and_cover_the_range(self):
        undertest = ScanRunner(2)

        chunks = undertest._chunks((3, 22))

        assert [k for chunk in chunks for k in chunk] == list(range(3, 23))
        assert len(chunks) == 7

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="Unknown scan kind 'bogus'"):
            ScanRunner(1).run("bogus", (1, 2), (2, 3))

    def test_hypothesis_violation_is_rejected(self):
        with pytest.raises(ValueError, match="needs k >= 2"):
            ScanRunner(1).run("lemma2", (1, 3), (2, 3))

    def test_lemma2_single_cell(self):
        report = run_scan("lemma2", (2, 2), (2, 2), workers=1)

        assert report.records == [(2, 2, 1, 0, 0, True)]
        assert report.passed

    def test_kellner_scan(self):
        report = run_scan("kellner", (1, 20), (3, 120), workers=2)

        assert report.records == [(1, 3, "2"), (3, 3, "4")]
        assert report.passed

    def test_theorem_scan_covers_every_cell(self):
        report = run_scan("theorem", (1, 10), (2, 30), workers=1, engine=PairedEngine)

        assert len(report.records) == report.grid_size == 290
        assert report.skipped == 0
        assert report.passed

    @pytest.mark.parametrize("kind", ["theorem", "lemma1", "lemma2", "kellner", "identities"])
    def test_deterministic_across_worker_counts(self, kind):
        k_range = (2, 51)
        n_range = (3, 52)

        serial = run_scan(kind, k_range, n_range, workers=1)
        parallel = run_scan(kind, k_range, n_range, workers=4, engine=NumpyEngine)

        assert outcome(serial) == outcome(parallel)
        assert outcome(serial).to_json() == outcome(parallel).to_json()
        assert serial.passed

    def test_records_plus_skipped_equal_grid(self):
        report = run_scan("identities", (2, 9), (3, 40), workers=2)

        # even k rows skip their 19 even n; odd k rows skip nothing from n = 4 on
        assert report.skipped == 4 * 19
        assert len(report.records) == 304 - 4 * 19
        assert len(report.records) + report.skipped == report.grid_size

    def test_dropped_cells_fail_the_scan(self, monkeypatch):
        monkeypatch.setattr(
            IdentitiesScan,
            "evaluate_row",
            classmethod(lambda cls, k, n_min, n_max, engine: RowOutcome()),
        )

        message = r"0 record\(s\) and 0 skipped cell\(s\) of a 304-cell"
        with pytest.raises(RuntimeError, match=message):
            run_scan("identities", (2, 9), (3, 40), workers=1)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "kind, k_range, n_range",
        [
            ("theorem", (1, 200), (2, 2000)),
            ("lemma1", (2, 100), (1, 1000)),
            ("lemma2", (2, 100), (2, 1000)),
            ("kellner", (1, 100), (3, 500)),
            ("identities", (2, 50), (3, 501)),
            ("identities", (2, 100), (3, 1001)),
        ],
    )
    def test_acceptance_grids(self, kind, k_range, n_range):
        report = run_scan(kind, k_range, n_range, workers=8)

        assert report.violations == []
