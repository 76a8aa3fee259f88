# cli/signals.py

import os
import sys
from collections.abc import Callable
from types import FrameType

# 128 + SIGINT
CANCELLED_EXIT_CODE = 130


def create_signal_handler(
    message: str = "Run interrupted",
) -> Callable[[int, FrameType | None], None]:
    """
    Build a signal handler that interrupts a long solver run.

    The first SIGINT/SIGTERM prints `message` and raises SystemExit(130), so
    open report and trace files are closed while the stack unwinds. A repeated
    signal exits at once.

    Args:
        message (str): Line printed to stderr on the first signal.

    Returns:
        Callable[[int, FrameType | None], None]: Handler for signal.signal.
    """
    interrupted = False

    def handle_signal(signum: int, frame: FrameType | None) -> None:
        nonlocal interrupted

        if interrupted:
            os._exit(CANCELLED_EXIT_CODE)  # pragma: no cover

        interrupted = True
        print(f"\n{message}", file=sys.stderr, flush=True)
        raise SystemExit(CANCELLED_EXIT_CODE)

    return handle_signal
