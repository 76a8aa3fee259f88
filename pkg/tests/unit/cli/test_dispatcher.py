# cli/test_dispatcher.py

import json
import sys
from argparse import Namespace
from io import StringIO
from pathlib import Path

import pytest

from polar_gauge.cli.dispatcher import dispatch_command, run_command
from polar_gauge.cli.parser import create_parser
from polar_gauge.errors import ConvergenceError, InvariantViolation

pytestmark = pytest.mark.unit


def test_run_command_successful_execution() -> None:
    """
    ARRANGE: function that executes successfully
    ACT:     run_command
    ASSERT:  function executes without raising
    """
    executed = False

    def succeed() -> None:
        nonlocal executed
        executed = True

    run_command(succeed)

    assert executed is True


def test_run_command_usage_error_exit_code() -> None:
    """
    ARRANGE: function that raises ValueError
    ACT:     run_command
    ASSERT:  raises SystemExit with code 1
    """

    def fail() -> None:
        raise ValueError("bad input")

    with pytest.raises(SystemExit) as exc_info:
        run_command(fail)

    assert exc_info.value.code == 1


def test_run_command_convergence_exit_code() -> None:
    """
    ARRANGE: function that raises ConvergenceError
    ACT:     run_command
    ASSERT:  raises SystemExit with code 2
    """

    def fail() -> None:
        raise ConvergenceError("iteration cap reached")

    with pytest.raises(SystemExit) as exc_info:
        run_command(fail)

    assert exc_info.value.code == 2


def test_run_command_invariant_exit_code() -> None:
    """
    ARRANGE: function that raises InvariantViolation
    ACT:     run_command
    ASSERT:  raises SystemExit with code 3
    """

    def fail() -> None:
        raise InvariantViolation(["monotone in alpha: 1e-3"])

    with pytest.raises(SystemExit) as exc_info:
        run_command(fail)

    assert exc_info.value.code == 3


def test_run_command_prints_error_to_stderr() -> None:
    """
    ARRANGE: function that raises RuntimeError and captured stderr
    ACT:     run_command
    ASSERT:  error message printed to stderr
    """

    def fail() -> None:
        raise RuntimeError("runtime error")

    original_stderr = sys.stderr
    captured_stderr = StringIO()

    try:
        sys.stderr = captured_stderr
        with pytest.raises(SystemExit):
            run_command(fail)
    finally:
        sys.stderr = original_stderr

    assert "RuntimeError: runtime error" in captured_stderr.getvalue()


def test_dispatch_command_unknown_command() -> None:
    """
    ARRANGE: unknown command in Namespace
    ACT:     dispatch_command
    ASSERT:  raises ValueError with appropriate message
    """
    args = Namespace(cmd="unknown")

    with pytest.raises(ValueError) as exc_info:
        dispatch_command(args)

    assert "Unknown command: unknown" in str(exc_info.value)


def test_dispatch_command_uses_handlers() -> None:
    """
    ARRANGE: handlers dictionary with a check handler
    ACT:     dispatch_command
    ASSERT:  check handler is called
    """
    called = []

    dispatch_command(
        Namespace(cmd="check"),
        handlers={"check": lambda: called.append("check")},
    )

    assert called == ["check"]


def test_dispatch_command_unknown_with_handlers() -> None:
    """
    ARRANGE: handlers dictionary without the requested command
    ACT:     dispatch_command
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        dispatch_command(Namespace(cmd="ema"), handlers={"check": lambda: None})


def test_dispatch_command_runs_envelope(tmp_path: Path) -> None:
    """
    ARRANGE: parsed envelope arguments writing to a file
    ACT:     dispatch_command with the production handlers
    ASSERT:  report holds the linf envelope value 1.5
    """
    out = tmp_path / "envelope.json"
    args = create_parser().parse_args(
        [
            "envelope",
            "--gauge",
            '{"kind": "linf", "dim": 2}',
            "--point",
            "3,1",
            "--out",
            str(out),
        ],
    )

    dispatch_command(args)

    assert json.loads(out.read_text())["value"] == pytest.approx(1.5)


def test_dispatch_command_bad_descriptor_exits_with_usage() -> None:
    """
    ARRANGE: envelope arguments with a malformed gauge descriptor
    ACT:     dispatch_command
    ASSERT:  exits with code 1
    """
    args = create_parser().parse_args(
        ["envelope", "--gauge", '{"kind": "linf"}', "--point", "3,1"],
    )
    original_stderr = sys.stderr

    try:
        sys.stderr = StringIO()
        with pytest.raises(SystemExit) as exc_info:
            dispatch_command(args)
    finally:
        sys.stderr = original_stderr

    assert exc_info.value.code == 1
