# cli/io.py

import csv
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

from pydantic import BaseModel

from polar_gauge.schemas import IterationTrace

type Row = Sequence[float | int | str]

CONTOUR_COLUMNS = ("x1", "x2", "kappa", "moreau_envelope", "polar_envelope")
SOLVER_COLUMNS = ("iter", "objective", "step", "grad_norm")
P4A_COLUMNS = ("iter", "p_value", "step_gap", "lambda")
EMA_COLUMNS = ("iter", "p_value", "step", "grad_norm")


def emit_report(report: BaseModel, path: Path | None) -> None:
    """
    Write a report as indented JSON to a file, or to stdout when path is None.
    """
    write_text(report.model_dump_json(indent=2), path)


def write_text(text: str, path: Path | None) -> None:
    if path is None:
        print(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n")


def write_csv(
    path: Path | None,
    header: Sequence[str],
    rows: Iterable[Row],
) -> None:
    """
    Write rows as CSV with floats in repr-stable %.12g form.

    Args:
        path (Path | None): Destination file; None writes to stdout.
        header (Sequence[str]): Column names.
        rows (Iterable[Row]): Data rows.
    """
    if path is None:
        _write_rows(sys.stdout, header, rows)
        return

    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        _write_rows(handle, header, rows)


def trace_rows(trace: IterationTrace, *, multiplier: bool = False) -> list[Row]:
    """
    Flattens an iteration trace into CSV rows.

    Args:
        trace (IterationTrace): The trace.
        multiplier (bool): Use the multiplier as the last column instead of the
            gradient norm.

    Returns:
        list[Row]: One row per record.
    """
    return [
        (
            record.iteration,
            record.objective,
            record.step,
            record.multiplier if multiplier else record.grad_norm,
        )
        for record in trace.records
    ]


def _write_rows(handle: TextIO, header: Sequence[str], rows: Iterable[Row]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([_format(value) for value in row] for row in rows)


def _format(value: float | int | str | None) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return "" if value is None else str(value)
