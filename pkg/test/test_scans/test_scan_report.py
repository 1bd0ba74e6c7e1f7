import dataclasses
import json

import pytest

from pypowersums.application import ScanReport, emit_report


def make_report(**overrides) -> ScanReport:
    fields = dict(
        scan_kind="kellner",
        k_range=(1, 5),
        n_range=(3, 10),
        records=[(1, 3, "2"), (3, 3, "4")],
        violations=[],
        elapsed_seconds=0.12345,
        worker_count=4,
    )
    fields.update(overrides)
    return ScanReport(**fields)


class TestScanReport:
    def test_json_layout(self):
        undertest = make_report()

        text = undertest.to_json()

        assert text == (
            '{"scan_kind":"kellner","k_range":[1,5],"n_range":[3,10],'
            '"records":[[1,3,"2"],[3,3,"4"]],"violations":[],'
            '"elapsed_seconds":0.123,"worker_count":4}'
        )

    def test_json_round_trip(self):
        undertest = make_report(
            scan_kind="identities",
            k_range=(2, 3),
            n_range=(3, 4),
            records=[(2, 3, True, True, None), (3, 3, True, None, None), (3, 4, None, None, True)],
            skipped=1,
        )

        parsed = ScanReport.from_json(undertest.to_json())

        assert dataclasses.replace(parsed, elapsed_seconds=0.0) == dataclasses.replace(
            undertest, elapsed_seconds=0.0
        )

    def test_from_json_rejects_garbage(self):
        with pytest.raises(ValueError, match="Not a scan report"):
            ScanReport.from_json('{"scan_kind": "theorem"}')

    def test_theorem_csv(self):
        undertest = make_report(
            scan_kind="theorem",
            k_range=(2, 2),
            n_range=(3, 4),
            records=[(2, 3, True, True, "C", "2", "1"), (2, 4, False, False, "NONE", "5", "3")],
        )

        assert undertest.to_csv() == (
            "k,n,predicted,actual,condition,ratio_num,ratio_den\n"
            "2,3,true,true,C,2,1\n"
            "2,4,false,false,NONE,5,3\n"
        )

    def test_identities_csv_leaves_inapplicable_checks_empty(self):
        undertest = make_report(
            scan_kind="identities", k_range=(3, 3), n_range=(3, 3), records=[(3, 3, True, None, None)]
        )

        assert undertest.to_csv().splitlines()[1] == "3,3,true,,"

    def test_passed_and_skipped(self):
        undertest = make_report(
            scan_kind="identities",
            k_range=(2, 2),
            n_range=(3, 6),
            records=[(2, 3, True, True, None), (2, 5, True, True, None)],
            skipped=2,
        )

        assert undertest.passed
        assert undertest.grid_size == 4
        assert undertest.skipped == 2

    def test_from_json_recovers_skipped(self):
        undertest = make_report(
            scan_kind="identities",
            k_range=(2, 2),
            n_range=(3, 6),
            records=[(2, 3, True, True, None), (2, 5, True, True, None)],
            skipped=2,
        )

        assert ScanReport.from_json(undertest.to_json()).skipped == 2
        assert ScanReport.from_json(make_report().to_json()).skipped == 0

    def test_kellner_skips_nothing(self):
        assert make_report().skipped == 0


class TestEmitReport:
    def test_json_to_stdout(self, capsys):
        emit_report(make_report(), "json")

        out = capsys.readouterr().out
        assert json.loads(out)["violations"] == []
        assert '"violations":[]' in out

    def test_csv_to_file(self, tmp_path):
        destination = tmp_path / "report.csv"

        emit_report(make_report(), "csv", destination)

        assert destination.read_text() == "k,n,ratio\n1,3,2\n3,3,4\n"

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="Unknown report format 'xml'"):
            emit_report(make_report(), "xml")

    def test_unwritable_destination_names_path(self, tmp_path):
        destination = tmp_path / "missing" / "report.json"

        with pytest.raises(OSError, match="Cannot write report to .*missing"):
            emit_report(make_report(), "json", destination)
