# schemas/test_reports.py

import pytest

from polar_gauge.schemas import (
    CheckReport,
    CheckResult,
    IterationRecord,
    IterationTrace,
)

pytestmark = pytest.mark.unit


def _report() -> CheckReport:
    return CheckReport(
        suite="envelope",
        results=(
            CheckResult(name="first", passed=True),
            CheckResult(name="second", passed=False, detail="error 1e-3"),
        ),
    )


def test_check_report_failed_when_any_check_fails() -> None:
    """
    ARRANGE: one passing and one failing result
    ACT:     passed
    ASSERT:  returns False
    """
    assert _report().passed is False


def test_check_report_failures_itemised() -> None:
    """
    ARRANGE: one passing and one failing result
    ACT:     failures
    ASSERT:  lists only the failing check with its detail
    """
    assert _report().failures == ("second: error 1e-3",)


def test_empty_check_report_passes() -> None:
    """
    ARRANGE: report with no results
    ACT:     passed
    ASSERT:  returns True
    """
    report = CheckReport(suite="envelope", results=())

    assert report.passed is True


def test_iteration_trace_objectives() -> None:
    """
    ARRANGE: trace with two records
    ACT:     objectives
    ASSERT:  returns the objective column in order
    """
    trace = IterationTrace(
        records=(
            IterationRecord(iteration=0, objective=2.0, step=1.0, grad_norm=1.0),
            IterationRecord(iteration=1, objective=1.5, step=1.0, grad_norm=0.5),
        ),
    )

    assert trace.objectives == (2.0, 1.5)
