# cli/config.py

import argparse
from pathlib import Path

from pydantic import BaseModel

from polar_gauge.schemas import GaugeDescriptor, LiftedDescriptor, RunConfig


def determine_log_level(args: argparse.Namespace) -> str | None:
    """
    Determine the appropriate log level from command line arguments.

    Args:
        args: Parsed command line arguments containing logging flags.

    Returns:
        str | None: The log level string, or None for default logging.
    """
    log_level_mapping = {
        "debug": "debug",
        "verbose": "development",
        "quiet": "production",
    }

    for flag, level in log_level_mapping.items():
        if getattr(args, flag, False):
            return level

    return None


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Resolve parsed arguments into a validated run configuration.

    Descriptor options accept inline JSON or a path to a JSON file. Points are
    comma-separated numbers.

    Args:
        args: Parsed command line arguments.

    Returns:
        RunConfig: The validated configuration.

    Raises:
        ValueError: On malformed points or tolerance overrides.
        pydantic.ValidationError: On invalid descriptors or settings.
    """
    point = getattr(args, "point", None) or getattr(args, "x0", None)
    gauge = getattr(args, "gauge", None)
    lifted = getattr(args, "lifted", None)

    settings = {
        "command": args.cmd,
        "alpha": args.alpha,
        "seed": args.seed,
        "gauge": _load_descriptor(GaugeDescriptor, gauge) if gauge else None,
        "lifted": _load_descriptor(LiftedDescriptor, lifted) if lifted else None,
        "instance": _optional_path(getattr(args, "instance", None)),
        "point": parse_point(point) if point else None,
        "out": _optional_path(args.out),
        "trace": _optional_path(getattr(args, "trace", None)),
        "compare": getattr(args, "compare", False),
        "max_iterations": args.max_iterations,
        "tolerances": parse_overrides(args.tol_override),
        "suite": getattr(args, "suite", "all"),
        "bounds": getattr(args, "bounds", 1.5),
        "resolution": getattr(args, "resolution", 101),
    }
    return RunConfig(**settings)


def parse_point(text: str) -> tuple[float, ...]:
    """
    Parse a comma-separated list of numbers.

    Raises:
        ValueError: If an entry is not a number.
    """
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed point '{text}'") from None


def parse_overrides(pairs: list[str]) -> dict[str, float]:
    """
    Parse repeated KEY=VALUE tolerance overrides.

    Raises:
        ValueError: If a pair is malformed.
    """
    overrides = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"expected KEY=VALUE, got '{pair}'")
        try:
            overrides[key.strip()] = float(value)
        except ValueError:
            raise ValueError(f"tolerance '{key}' is not a number") from None
    return overrides


def _load_descriptor[M: BaseModel](model: type[M], text: str) -> M:
    if text.lstrip().startswith("{"):
        return model.model_validate_json(text)
    return model.model_validate_json(Path(text).read_text())


def _optional_path(value: str | None) -> Path | None:
    return Path(value) if value else None
