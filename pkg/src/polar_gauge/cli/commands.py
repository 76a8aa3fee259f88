# cli/commands.py

import logging

import numpy as np

from polar_gauge.checks import require_passed, run_suite
from polar_gauge.config import (
    DEFAULT_TOLERANCES,
    EMAOptions,
    P4AOptions,
    SolverOptions,
    Tolerances,
)
from polar_gauge.duality import load_problem, solve_gauge_dual, solve_lagrange_baseline
from polar_gauge.envelope import polar_envelope, polar_envelope_gradient, polar_prox
from polar_gauge.errors import ConvergenceError, NondifferentiableError
from polar_gauge.gauges import Gauge, gauge_from_descriptor, moreau_envelope
from polar_gauge.logging_config import SUMMARY_LOGGER
from polar_gauge.perspective import (
    LiftedFunction,
    lifted_from_descriptor,
    run_ema,
    run_p4a,
)
from polar_gauge.schemas import (
    AlgorithmReport,
    EnvelopeReport,
    RunConfig,
    SolveComparison,
    SolveReport,
)

from .io import (
    CONTOUR_COLUMNS,
    EMA_COLUMNS,
    P4A_COLUMNS,
    SOLVER_COLUMNS,
    emit_report,
    trace_rows,
    write_csv,
)

logger = logging.getLogger(__name__)
summary = logging.getLogger(SUMMARY_LOGGER)

DEFAULT_ALPHA = 1.0


def cmd_envelope(config: RunConfig) -> None:
    """
    Evaluate the polar envelope, proximal point and gradient at one point.
    """
    g = _gauge(config)
    alpha = config.alpha or DEFAULT_ALPHA
    tolerances = _tolerances(config)
    point = _require_point(config)

    result = polar_prox(g, alpha, point, tolerances=tolerances)
    try:
        gradient = polar_envelope_gradient(g, alpha, point, tolerances=tolerances)
    except NondifferentiableError:
        logger.info("Envelope vanishes at the point; no gradient reported")
        gradient = None

    report = EnvelopeReport(
        value=result.value,
        prox_point=result.prox_point,
        case=result.case,
        root_residual=result.root_residual,
        gradient=None if gradient is None else gradient.gradient,
    )
    emit_report(report, config.out)


def cmd_contour(config: RunConfig) -> None:
    """
    Write gauge, Moreau envelope and polar envelope values on a square grid.

    Raises:
        ValueError: If the gauge is not two-dimensional.
    """
    g = _gauge(config)
    if g.dim != 2:
        raise ValueError(f"contour needs a two-dimensional gauge, got dim {g.dim}")
    alpha = config.alpha or DEFAULT_ALPHA
    tolerances = _tolerances(config)

    axis = np.linspace(-config.bounds, config.bounds, config.resolution)
    rows = []
    for x1 in axis:
        for x2 in axis:
            x = np.array([x1, x2])
            rows.append(
                (
                    float(x1),
                    float(x2),
                    g.evaluate(x),
                    moreau_envelope(g, alpha, x),
                    polar_envelope(g, alpha, x, tolerances=tolerances),
                ),
            )
    write_csv(config.out, CONTOUR_COLUMNS, rows)


def cmd_bp_solve(config: RunConfig) -> None:
    """
    Solve the polar-smoothed gauge dual, optionally alongside the Lagrange dual,
    and print the duality product and feasibility residual of each solve.

    Raises:
        ConvergenceError: If a solver stops at its iteration cap.
    """
    tolerances = _tolerances(config)
    problem = load_problem(config.instance, alpha=config.alpha, tolerances=tolerances)
    opts = _solver_options(config)

    report = solve_gauge_dual(problem, opts, tolerances=tolerances)
    _summarise(report)
    reports = [report]

    if config.compare:
        baseline = solve_lagrange_baseline(problem, opts, tolerances=tolerances)
        _summarise(baseline)
        reports.append(baseline)
        emit_report(SolveComparison(gauge_dual=report, lagrange=baseline), config.out)
    else:
        emit_report(report, config.out)

    if config.trace is not None:
        write_csv(config.trace, SOLVER_COLUMNS, trace_rows(report.trace))
    _require_converged(reports)


def cmd_lagrange_solve(config: RunConfig) -> None:
    """
    Solve the regularised Lagrange dual and recover the primal point.

    Raises:
        ConvergenceError: If the solver stops at its iteration cap.
    """
    tolerances = _tolerances(config)
    problem = load_problem(config.instance, alpha=config.alpha, tolerances=tolerances)
    report = solve_lagrange_baseline(
        problem,
        _solver_options(config),
        tolerances=tolerances,
    )
    _summarise(report)
    emit_report(report, config.out)

    if config.trace is not None:
        write_csv(config.trace, SOLVER_COLUMNS, trace_rows(report.trace))
    _require_converged([report])


def cmd_p4a(config: RunConfig) -> None:
    """
    Run the projected polar proximal-point algorithm on a lifted function.

    Raises:
        ConvergenceError: If the run stops at its iteration cap.
    """
    lf = _lifted(config)
    opts = P4AOptions(**_cap(config))
    run = run_p4a(
        lf,
        config.alpha or DEFAULT_ALPHA,
        _require_point(config),
        opts,
        tolerances=lf.tolerances.with_overrides(config.tolerances),
    )
    _emit_algorithm(config, run.report, P4A_COLUMNS, multiplier=True)


def cmd_ema(config: RunConfig) -> None:
    """
    Minimise the projected polar envelope by steepest descent.

    Raises:
        ConvergenceError: If the run stops at its iteration cap.
    """
    lf = _lifted(config)
    opts = EMAOptions(**_cap(config))
    run = run_ema(
        lf,
        config.alpha or DEFAULT_ALPHA,
        _require_point(config),
        opts,
        tolerances=lf.tolerances.with_overrides(config.tolerances),
    )
    _emit_algorithm(config, run.report, EMA_COLUMNS, multiplier=False)


def cmd_check(config: RunConfig) -> None:
    """
    Run invariant suites and report every failing check.

    Raises:
        InvariantViolation: If any check fails.
    """
    report = run_suite(config.suite, seed=config.seed)
    emit_report(report, config.out)
    require_passed(report)


def _emit_algorithm(
    config: RunConfig,
    report: AlgorithmReport,
    columns: tuple[str, ...],
    *,
    multiplier: bool,
) -> None:
    emit_report(report, config.out)
    if config.trace is not None:
        rows = trace_rows(report.trace, multiplier=multiplier)
        write_csv(config.trace, columns, rows)
    if not report.converged:
        raise ConvergenceError(
            f"{report.algorithm.upper()} did not converge: {report.trace.stop_reason}",
            last_iterate=np.asarray(report.final_point),
        )


def _summarise(report: SolveReport) -> None:
    if report.duality_product is None:
        summary.info(
            "%s: primal value %.12g, feasibility residual %.3e",
            report.method,
            report.primal_value,
            report.feasibility_residual,
        )
        return
    summary.info(
        "%s: duality product %.12g, feasibility residual %.3e",
        report.method,
        report.duality_product,
        report.feasibility_residual,
    )


def _require_converged(reports: list[SolveReport]) -> None:
    for report in reports:
        if not report.converged:
            raise ConvergenceError(
                f"{report.method} solver did not converge: {report.trace.stop_reason}",
                last_iterate=np.asarray(report.dual_solution),
            )


def _gauge(config: RunConfig) -> Gauge:
    if config.gauge is None:
        raise ValueError(f"'{config.command}' needs a gauge descriptor (--gauge)")
    return gauge_from_descriptor(config.gauge)


def _lifted(config: RunConfig) -> LiftedFunction:
    if config.lifted is None:
        raise ValueError(f"'{config.command}' needs a lifted descriptor (--lifted)")
    return lifted_from_descriptor(config.lifted)


def _require_point(config: RunConfig) -> tuple[float, ...]:
    if config.point is None:
        raise ValueError(f"'{config.command}' needs a point")
    return config.point


def _tolerances(config: RunConfig) -> Tolerances:
    return DEFAULT_TOLERANCES.with_overrides(config.tolerances)


def _cap(config: RunConfig) -> dict[str, int]:
    if config.max_iterations is None:
        return {}
    return {"max_iterations": config.max_iterations}


def _solver_options(config: RunConfig) -> SolverOptions:
    return SolverOptions(**_cap(config))
