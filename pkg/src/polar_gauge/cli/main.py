# cli/main.py

import signal
from collections.abc import Callable
from typing import Any

from polar_gauge.logging_config import configure_logging

from .config import determine_log_level
from .dispatcher import dispatch_command
from .parser import create_parser
from .signals import create_signal_handler


def main(
    dispatcher: Callable[[Any], None] | None = None,
    argv: list[str] | None = None,
) -> None:
    """
    Entry point for the polar-gauge CLI application.

    Parses the command line, configures logging from the verbosity flags and
    hands the parsed arguments to the dispatcher.

    Args:
        dispatcher: Optional callable to dispatch commands. If not provided,
            uses the default dispatch_command function.
        argv: Optional argument list; None reads sys.argv.

    Raises:
        SystemExit: When command execution fails or invalid arguments provided.
    """
    if dispatcher is None:
        dispatcher = dispatch_command

    # first Ctrl+C / SIGTERM unwinds, a second exits immediately
    handle_signal = create_signal_handler()
    signal.signal(signal.SIGINT, handle_signal)
    signal.signal(signal.SIGTERM, handle_signal)

    args = create_parser().parse_args(argv)
    configure_logging(determine_log_level(args))
    dispatcher(args)
