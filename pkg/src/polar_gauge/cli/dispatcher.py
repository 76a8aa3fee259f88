# cli/dispatcher.py

import sys
from argparse import Namespace
from collections.abc import Callable
from functools import partial

from polar_gauge.errors import ConvergenceError, InvariantViolation
from polar_gauge.schemas import RunConfig

from .commands import (
    cmd_bp_solve,
    cmd_check,
    cmd_contour,
    cmd_ema,
    cmd_envelope,
    cmd_lagrange_solve,
    cmd_p4a,
)
from .config import build_run_config

EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2
EXIT_INVARIANT = 3

COMMANDS: dict[str, Callable[[RunConfig], None]] = {
    "envelope": cmd_envelope,
    "contour": cmd_contour,
    "bp-solve": cmd_bp_solve,
    "lagrange-solve": cmd_lagrange_solve,
    "p4a": cmd_p4a,
    "ema": cmd_ema,
    "check": cmd_check,
}


def run_command(fn: Callable[[], None]) -> None:
    """
    Execute a command function with exception handling.

    Runs the provided function and handles exceptions by printing the error to
    stderr and exiting with a status code: 3 for failed invariant checks, 2 for
    solvers that did not converge and 1 for everything else.

    Args:
        fn: A function to execute.
    """
    try:
        fn()
    except InvariantViolation as exc:
        _fail(exc, EXIT_INVARIANT)
    except ConvergenceError as exc:
        _fail(exc, EXIT_NOT_CONVERGED)
    except Exception as exc:
        _fail(exc, EXIT_USAGE)


def dispatch_command(args: Namespace, handlers: dict | None = None) -> None:
    """
    Dispatch execution to the appropriate command handler.

    Args:
        args: Parsed command line arguments from argparse.
        handlers: Optional dictionary mapping command names to handler functions.
            If not provided, uses the default production handlers, which build a
            validated RunConfig from the arguments and run the command.

    Raises:
        ValueError: If the command is not recognised.
    """
    if handlers is None:
        handlers = {
            name: partial(_execute, command, args)
            for name, command in COMMANDS.items()
        }

    handler = handlers.get(args.cmd)
    if handler:
        handler()
    else:
        raise ValueError(f"Unknown command: {args.cmd}")


def _execute(command: Callable[[RunConfig], None], args: Namespace) -> None:
    run_command(lambda: command(build_run_config(args)))


def _fail(exc: Exception, code: int) -> None:
    print(f"{exc.__class__.__name__}: {exc}", file=sys.stderr)
    raise SystemExit(code) from None
