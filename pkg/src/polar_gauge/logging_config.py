# polar_gauge/logging_config.py

import logging.config
import os
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

from platformdirs import user_log_dir

SUMMARY_LOGGER = "polar_gauge.summary"

_CONSOLE_LEVELS = {
    "production": "WARNING",
    "debug": "DEBUG",
    "development": "INFO",
}


def configure_logging(override_level: str | None = None) -> None:
    """
    Configures the 'polar_gauge' loggers from an override or the LOG_CONFIG
    environment variable.

    Three handlers are installed:
        - console: stderr, at the environment level ('production' WARNING,
          'debug' DEBUG, 'development' or anything else INFO).
        - summary: stderr, always INFO, bare messages; only the
          `polar_gauge.summary` logger writes to it, so solver results stay
          visible under the production level.
        - file: a dated log file at DEBUG.

    Everything goes to stderr or the file so CSV and JSON on stdout stay clean.

    Args:
        override_level (str | None): Override the environment log level.
    """
    env = (override_level or os.getenv("LOG_CONFIG", "production")).lower()
    console_level = _CONSOLE_LEVELS.get(env, "INFO")
    logging.config.dictConfig(_build_config(console_level, _resolve_log_file()))


def _build_config(console_level: str, log_file: str) -> dict[str, Any]:
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s | %(module)-16s | %(levelname)-5s | %(message)s",
                "datefmt": "%Y-%m-%dT%H:%M:%S",
            },
            "bare": {"format": "%(message)s"},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": console_level,
                "formatter": "standard",
                "stream": "ext://sys.stderr",
            },
            "summary": {
                "class": "logging.StreamHandler",
                "level": "INFO",
                "formatter": "bare",
                "stream": "ext://sys.stderr",
            },
            "file": {
                "class": "logging.FileHandler",
                "level": "DEBUG",
                "formatter": "standard",
                "filename": log_file,
                "encoding": "utf8",
            },
        },
        "loggers": {
            "polar_gauge": {
                "level": "DEBUG",
                "handlers": ["console", "file"],
                "propagate": False,
            },
            SUMMARY_LOGGER: {
                "level": "INFO",
                "handlers": ["summary", "file"],
                "propagate": False,
            },
        },
    }


def _resolve_log_file() -> str:
    """
    Resolves today's log file, under LOG_DIR when set and the user log directory
    otherwise, creating the directory if needed.
    """
    if log_dir_override := os.getenv("LOG_DIR"):
        log_dir = Path(log_dir_override)
    else:
        log_dir = Path(user_log_dir("polar-gauge", "polar-gauge"))

    log_dir.mkdir(parents=True, exist_ok=True)
    today = datetime.now(UTC).date()
    return str(log_dir / f"polar_gauge_{today:%Y-%m-%d}.log")
