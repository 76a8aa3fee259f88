# cli/test_io.py

from pathlib import Path

import pytest

from polar_gauge.cli.io import emit_report, trace_rows, write_csv
from polar_gauge.schemas import CheckReport, IterationRecord, IterationTrace

pytestmark = pytest.mark.unit


def _trace() -> IterationTrace:
    return IterationTrace(
        records=(
            IterationRecord(
                iteration=0,
                objective=2.0,
                step=0.5,
                grad_norm=1.0,
                multiplier=0.25,
            ),
        ),
        converged=True,
    )


def test_write_csv_header(tmp_path: Path) -> None:
    """
    ARRANGE: header and no rows
    ACT:     write_csv
    ASSERT:  file holds only the header line
    """
    path = tmp_path / "out.csv"

    write_csv(path, ("a", "b"), [])

    assert path.read_text() == "a,b\n"


def test_write_csv_formats_floats(tmp_path: Path) -> None:
    """
    ARRANGE: row with a float that has a long repr
    ACT:     write_csv
    ASSERT:  float is written with twelve significant digits
    """
    path = tmp_path / "out.csv"

    write_csv(path, ("i", "v"), [(1, 0.1 + 0.2)])

    assert path.read_text().splitlines()[1] == "1,0.3"


def test_write_csv_writes_none_as_empty(tmp_path: Path) -> None:
    """
    ARRANGE: row with a missing value
    ACT:     write_csv
    ASSERT:  missing value becomes an empty field
    """
    path = tmp_path / "out.csv"

    write_csv(path, ("i", "v"), [(0, None)])

    assert path.read_text().splitlines()[1] == "0,"


def test_write_csv_creates_parent(tmp_path: Path) -> None:
    """
    ARRANGE: destination inside a missing directory
    ACT:     write_csv
    ASSERT:  file is created
    """
    path = tmp_path / "nested" / "out.csv"

    write_csv(path, ("a",), [(1,)])

    assert path.exists()


def test_trace_rows_gradient_column() -> None:
    """
    ARRANGE: one-record trace
    ACT:     trace_rows
    ASSERT:  last column is the gradient norm
    """
    assert trace_rows(_trace()) == [(0, 2.0, 0.5, 1.0)]


def test_trace_rows_multiplier_column() -> None:
    """
    ARRANGE: one-record trace with a multiplier
    ACT:     trace_rows with multiplier=True
    ASSERT:  last column is the multiplier
    """
    assert trace_rows(_trace(), multiplier=True) == [(0, 2.0, 0.5, 0.25)]


def test_emit_report_writes_json(tmp_path: Path) -> None:
    """
    ARRANGE: check report and a file destination
    ACT:     emit_report
    ASSERT:  file parses back into the same report
    """
    report = CheckReport(suite="envelope", results=())
    path = tmp_path / "report.json"

    emit_report(report, path)

    assert CheckReport.model_validate_json(path.read_text()) == report
