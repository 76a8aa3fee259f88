# perspective/algorithms.py

import logging
from collections.abc import Callable
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.config import EMAOptions, P4AOptions, Tolerances
from polar_gauge.envelope import polar_envelope_gradient, polar_prox
from polar_gauge.errors import LineSearchError
from polar_gauge.schemas import (
    AlgorithmReport,
    IterationRecord,
    IterationTrace,
    ProxCase,
)

from .lifted import LiftedFunction

logger = logging.getLogger(__name__)

type BetaSchedule = Callable[[int], float]


class ProjectedProx(NamedTuple):
    """
    Projected polar envelope p(x) = f^π_α(x, 1) with rpprox(x) = (point, multiplier).
    """

    value: float
    point: Vector
    multiplier: float
    case: ProxCase


class P4AState(NamedTuple):
    """
    One step of the projected polar proximal-point iteration.

    Attributes:
        x: Iterate x_k.
        multiplier: λ_{k+1} from rpprox(x_k).
        envelope_value: p(x_k).
        step_gap: |x_{k+1} - x_k|.
    """

    x: Vector
    multiplier: float
    envelope_value: float
    step_gap: float


class P4ARun(NamedTuple):
    states: tuple[P4AState, ...]
    report: AlgorithmReport


class EMAState(NamedTuple):
    """
    One accepted steepest-descent step on the projected polar envelope.

    Attributes:
        x: Iterate x_k before the step.
        envelope_value: p(x_k).
        gradient_norm: |grad p(x_k)|.
        step: Accepted step 2^-t beta_k.
        next_value: p(x_{k+1}).
    """

    x: Vector
    envelope_value: float
    gradient_norm: float
    step: float
    next_value: float


class EMARun(NamedTuple):
    states: tuple[EMAState, ...]
    report: AlgorithmReport


class _Iterate(NamedTuple):
    point: Vector
    value: float
    gradient: Vector


def projected_polar_envelope(
    lf: LiftedFunction,
    alpha: float,
    x: ArrayLike,
    *,
    tolerances: Tolerances | None = None,
) -> ProjectedProx:
    """
    Evaluates p(x) = f^π_α(x, 1) and rpprox(x) = pprox_{α f^π}(x, 1).

    Args:
        lf (LiftedFunction): The lifted function.
        alpha (float): Envelope parameter, positive.
        x (ArrayLike): Point of length `lf.dim`.
        tolerances (Tolerances | None): Overrides `lf.tolerances`.

    Returns:
        ProjectedProx: Value, x-part and multiplier of the lifted prox point.
    """
    lifted = np.append(as_vector(x, lf.dim), 1.0)
    result = polar_prox(
        lf.as_gauge(),
        alpha,
        lifted,
        tolerances=tolerances or lf.tolerances,
    )
    point = result.prox_point
    return ProjectedProx(result.value, point[:-1], float(point[-1]), result.case)


def projected_envelope_gradient(
    lf: LiftedFunction,
    alpha: float,
    x: ArrayLike,
    *,
    tolerances: Tolerances | None = None,
) -> Vector:
    """
    Gradient of p at x: the x-block of the lifted envelope gradient at (x, 1).

    Raises:
        NondifferentiableError: If the lifted envelope vanishes at (x, 1).
    """
    _, gradient = _value_and_gradient(lf, alpha, x, tolerances or lf.tolerances)
    return gradient


def scale_minimizer(lf: LiftedFunction, alpha: float, x_star: ArrayLike) -> Vector:
    """
    Maps a minimiser x* of f to the minimiser x* / (1 + alpha f(x*)) of p.
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(x_star, lf.dim)
    return point / (1 + weight * lf.evaluate(point))


def run_p4a(
    lf: LiftedFunction,
    alpha: float,
    x0: ArrayLike,
    opts: P4AOptions | None = None,
    *,
    tolerances: Tolerances | None = None,
) -> P4ARun:
    """
    Runs the projected polar proximal-point algorithm

        (x_{k+1}, λ_{k+1}) = rpprox(x_k)

    until |x_{k+1} - x_k| <= stop_tol or the iteration cap. The envelope p(x_k)
    is nonincreasing along the run; an increase beyond
    `monotone_slack * (1 + |p(x_k)|)` is logged as a warning and clears the
    report's `monotone` flag. The candidate minimiser of f is x / λ at the final
    pair.

    Args:
        lf (LiftedFunction): The lifted function.
        alpha (float): Envelope parameter, positive.
        x0 (ArrayLike): Starting point.
        opts (P4AOptions | None): Iteration settings; defaults when None.
        tolerances (Tolerances | None): Overrides `lf.tolerances`.

    Returns:
        P4ARun: Per-iteration states and the final report.
    """
    opts = opts or P4AOptions()
    tolerances = tolerances or lf.tolerances
    x = as_vector(x0, lf.dim)
    stop = _stop_tolerance(opts.stop_tol, x)

    states: list[P4AState] = []
    converged, monotone = False, True

    for iteration in range(opts.max_iterations):
        prox = projected_polar_envelope(lf, alpha, x, tolerances=tolerances)
        gap = float(np.linalg.norm(prox.point - x))

        if states and _rose(states[-1].envelope_value, prox.value, opts, iteration):
            monotone = False
        states.append(P4AState(x, prox.multiplier, prox.value, gap))
        if iteration % opts.log_every == 0:
            logger.debug(
                "P4A iteration %d: p %.12g, gap %.3e",
                iteration,
                prox.value,
                gap,
            )

        x = prox.point
        if gap <= stop:
            converged = True
            break

    records = tuple(
        IterationRecord(
            iteration=index,
            objective=state.envelope_value,
            step=state.step_gap,
            grad_norm=state.step_gap,
            multiplier=state.multiplier,
        )
        for index, state in enumerate(states)
    )
    reason = "step gap tolerance met" if converged else "iteration cap reached"
    report = _finish(
        "p4a",
        lf,
        alpha,
        x,
        IterationTrace(records=records, converged=converged, stop_reason=reason),
        tolerances,
    )
    report = report.model_copy(update={"monotone": monotone})
    return P4ARun(tuple(states), report)


def run_ema(
    lf: LiftedFunction,
    alpha: float,
    x0: ArrayLike,
    opts: EMAOptions | None = None,
    *,
    beta_schedule: BetaSchedule | None = None,
    tolerances: Tolerances | None = None,
) -> EMARun:
    """
    Minimises p by steepest descent with Armijo backtracking: each iteration
    accepts the smallest t >= 0 with

        p(x - 2^-t beta_k grad) <= p(x) - sigma 2^-t beta_k |grad|^2,

    where beta_k comes from `beta_schedule` (or `opts.beta`) clipped to
    [beta_min, beta_max]. The run stops once |grad p(x)| <= stop_tol. One final
    rpprox call recovers the candidate minimiser of f.

    Args:
        lf (LiftedFunction): The lifted function.
        alpha (float): Envelope parameter, positive.
        x0 (ArrayLike): Starting point.
        opts (EMAOptions | None): Iteration settings; defaults when None.
        beta_schedule (BetaSchedule | None): Maps the iteration to a trial step.
        tolerances (Tolerances | None): Overrides `lf.tolerances`.

    Returns:
        EMARun: Accepted steps and the final report.

    Raises:
        LineSearchError: If backtracking exhausts `max_halvings`.
    """
    opts = opts or EMAOptions()
    tolerances = tolerances or lf.tolerances
    x = as_vector(x0, lf.dim)
    stop = _stop_tolerance(opts.stop_tol, x)

    states: list[EMAState] = []
    converged = False

    for iteration in range(opts.max_iterations):
        value, gradient = _value_and_gradient(lf, alpha, x, tolerances)
        norm = float(np.linalg.norm(gradient))
        if norm <= stop:
            converged = True
            break

        beta = beta_schedule(iteration) if beta_schedule else opts.beta
        beta = float(np.clip(beta, opts.beta_min, opts.beta_max))
        step, candidate, candidate_value = _armijo_search(
            lf,
            alpha,
            _Iterate(x, value, gradient),
            beta,
            opts,
            tolerances,
        )
        states.append(EMAState(x, value, norm, step, candidate_value))
        if iteration % opts.log_every == 0:
            logger.debug(
                "EMA iteration %d: p %.12g, |grad| %.3e",
                iteration,
                value,
                norm,
            )
        x = candidate

    records = tuple(
        IterationRecord(
            iteration=index,
            objective=state.next_value,
            step=state.step,
            grad_norm=state.gradient_norm,
        )
        for index, state in enumerate(states)
    )
    reason = "gradient tolerance met" if converged else "iteration cap reached"
    report = _finish(
        "ema",
        lf,
        alpha,
        x,
        IterationTrace(records=records, converged=converged, stop_reason=reason),
        tolerances,
    )
    return EMARun(tuple(states), report)


def _armijo_search(
    lf: LiftedFunction,
    alpha: float,
    current: _Iterate,
    beta: float,
    opts: EMAOptions,
    tolerances: Tolerances,
) -> tuple[float, Vector, float]:
    """
    Returns the accepted step, the new iterate and its envelope value.
    """
    x, value, gradient = current
    squared = float(gradient @ gradient)
    history: list[float] = []

    for halvings in range(opts.max_halvings + 1):
        step = beta / 2**halvings
        candidate = x - step * gradient
        candidate_value = projected_polar_envelope(
            lf,
            alpha,
            candidate,
            tolerances=tolerances,
        ).value
        if candidate_value <= value - opts.armijo_sigma * step * squared:
            return step, candidate, candidate_value
        history.append(candidate_value)

    raise LineSearchError(
        f"Armijo backtracking failed after {opts.max_halvings} halvings",
        last_iterate=x,
        residual=float(np.sqrt(squared)),
        history=history,
    )


def _value_and_gradient(
    lf: LiftedFunction,
    alpha: float,
    x: ArrayLike,
    tolerances: Tolerances,
) -> tuple[float, Vector]:
    lifted = np.append(as_vector(x, lf.dim), 1.0)
    result = polar_envelope_gradient(
        lf.as_gauge(),
        alpha,
        lifted,
        tolerances=tolerances,
    )
    return result.value, result.gradient[:-1]


def _rose(previous: float, value: float, opts: P4AOptions, iteration: int) -> bool:
    if value <= previous + opts.monotone_slack * (1 + abs(previous)):
        return False
    logger.warning(
        "Projected polar envelope increased at iteration %d: %.12g > %.12g",
        iteration,
        value,
        previous,
    )
    return True


def _finish(
    algorithm: str,
    lf: LiftedFunction,
    alpha: float,
    x: Vector,
    trace: IterationTrace,
    tolerances: Tolerances,
) -> AlgorithmReport:
    """
    Applies rpprox once more at the final iterate and recovers x / λ.
    """
    prox = projected_polar_envelope(lf, alpha, x, tolerances=tolerances)
    degenerate = prox.multiplier <= tolerances.lambda_floor

    candidate: Vector | None = None
    candidate_value: float | None = None
    if degenerate:
        logger.warning(
            "%s stopped at a degenerate multiplier %.3e; no minimiser recovered",
            algorithm.upper(),
            prox.multiplier,
        )
    else:
        candidate = prox.point / prox.multiplier
        candidate_value = lf.evaluate(candidate)

    logger.info(
        "%s finished after %d iteration(s) (%s): p %.12g, multiplier %.6g",
        algorithm.upper(),
        len(trace.records),
        trace.stop_reason,
        prox.value,
        prox.multiplier,
    )
    return AlgorithmReport(
        algorithm=algorithm,
        final_point=x,
        envelope_value=prox.value,
        multiplier=prox.multiplier,
        candidate_minimizer=candidate,
        candidate_value=candidate_value,
        degenerate=degenerate,
        converged=trace.converged,
        trace=trace,
    )


def _stop_tolerance(stop_tol: float | None, x0: Vector) -> float:
    if stop_tol is not None:
        return stop_tol
    return 1e-8 * (1 + float(np.linalg.norm(x0)))
