# cli/parser.py

import argparse

SUITE_CHOICES = ("envelope", "convolution", "duality", "perspective", "all")


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser with options and subcommands.

    Returns:
        argparse.ArgumentParser: Configured parser with all CLI options.
    """
    parser = argparse.ArgumentParser(
        prog="polar-gauge",
        description="evaluate polar envelopes and run gauge-dual and perspective "
        "solvers",
        epilog="use 'polar-gauge <command> --help' for help",
    )

    _add_logging_options(parser)
    _add_subcommands(parser)

    return parser


def _add_logging_options(parser: argparse.ArgumentParser) -> None:
    """
    Add logging level options to the argument parser.

    Args:
        parser: The argument parser to add options to.
    """
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="enable verbose logging (INFO level)",
    )
    parser.add_argument(
        "-d",
        "--debug",
        action="store_true",
        help="enable debug logging (DEBUG level)",
    )
    parser.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        help="quiet mode - only show warnings and errors",
    )


def _common_options() -> argparse.ArgumentParser:
    """
    Options shared by every subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, help="envelope parameter")
    common.add_argument("--seed", type=int, default=42, help="random seed")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument(
        "--tol-override",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a numeric tolerance, may be repeated",
    )
    common.add_argument("--max-iterations", type=int, help="iteration cap")
    return common


def _add_subcommands(parser: argparse.ArgumentParser) -> None:
    """
    Add all subcommands to the argument parser.

    Args:
        parser: The argument parser to add subcommands to.
    """
    sub = parser.add_subparsers(
        dest="cmd",
        required=True,
        title="commands",
        description="available operations",
    )
    common = _common_options()

    # add envelope subcommand
    envelope = sub.add_parser(
        "envelope",
        parents=[common],
        help="evaluate the polar envelope and polar proximal point",
        description="compute the polar envelope, the polar proximal point and, "
        "where it exists, the gradient of a catalog gauge at one point",
    )
    _add_gauge_option(envelope)
    envelope.add_argument("--point", required=True, help="comma-separated point")

    # add contour subcommand
    contour = sub.add_parser(
        "contour",
        parents=[common],
        help="emit a grid of gauge, Moreau and polar envelope values",
        description="evaluate a two-dimensional gauge with its Moreau and polar "
        "envelopes on a square grid and write the values as CSV",
    )
    _add_gauge_option(contour)
    contour.add_argument("--bounds", type=float, default=1.5, help="grid half side")
    contour.add_argument("--resolution", type=int, default=101, help="points per axis")

    # add dual solver subcommands
    for name, text in (
        ("bp-solve", "solve the polar-smoothed gauge dual"),
        ("lagrange-solve", "solve the regularised Lagrange dual"),
    ):
        solver = sub.add_parser(
            name,
            parents=[common],
            help=text,
            description=f"{text} of a basis pursuit instance and recover the "
            "primal solution",
        )
        solver.add_argument("--instance", help="instance JSON (default: bundled)")
        solver.add_argument("--trace", help="iteration trace CSV")
        if name == "bp-solve":
            solver.add_argument(
                "--compare",
                action="store_true",
                help="also run the Lagrange baseline",
            )

    # add perspective subcommands
    for name, text in (
        ("p4a", "run the projected polar proximal-point algorithm"),
        ("ema", "minimise the projected polar envelope by steepest descent"),
    ):
        algorithm = sub.add_parser(
            name,
            parents=[common],
            help=text,
            description=f"{text} and recover a minimiser of the lifted function",
        )
        algorithm.add_argument(
            "--lifted",
            required=True,
            help="lifted function descriptor as JSON text or a JSON file",
        )
        algorithm.add_argument("--x0", required=True, help="comma-separated start")
        algorithm.add_argument("--trace", help="iteration trace CSV")

    # add check subcommand
    check = sub.add_parser(
        "check",
        parents=[common],
        help="run invariant check suites",
        description="run the invariant suites with fixed seeds; the exit code "
        "is nonzero when any check fails",
    )
    check.add_argument("suite", nargs="?", default="all", choices=SUITE_CHOICES)


def _add_gauge_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--gauge",
        required=True,
        help="gauge descriptor as JSON text or a JSON file",
    )
