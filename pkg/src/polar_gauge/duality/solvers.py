# duality/solvers.py

import logging
from typing import NamedTuple

import numpy as np

from polar_gauge._utils import Vector
from polar_gauge.config import DEFAULT_TOLERANCES, SolverOptions, Tolerances
from polar_gauge.errors import LineSearchError, NondifferentiableError, RecoveryError
from polar_gauge.gauges import moreau_prox
from polar_gauge.schemas import IterationRecord, IterationTrace, SolveReport

from .problem import (
    GaugeDualProblem,
    dual_objective,
    dual_start,
    dual_value,
    feasibility_residual,
    primal_objective,
    project_dual_feasible,
)

logger = logging.getLogger(__name__)


class _Iterate(NamedTuple):
    point: Vector
    value: float
    gradient: Vector


def solve_gauge_dual(
    p: GaugeDualProblem,
    opts: SolverOptions | None = None,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SolveReport:
    """
    Solves the smooth gauge dual by projected gradient descent and recovers the
    primal solution.

    Each iteration projects y - t grad onto the dual feasible set and accepts
    the first trial step t (Barzilai-Borwein, then backtracking) meeting the
    Armijo condition f(y+) <= f(y) + c1 <grad, y+ - y>. Trial points where the
    objective is not differentiable shorten the step. The run stops once
    |y+ - y| <= step_tol (1 + |y|) and the primal point recovered from y+ meets
    |b - A x| <= feas_rel (1 + |b|); a small step at an infeasible primal
    point does not stop the run.

    The primal point is recovered as x = (1/r) / (kappa(u) + alpha |u|) * u with
    u = prox_{r kappa}(A^T y) and r the final dual value.

    Args:
        p (GaugeDualProblem): The problem.
        opts (SolverOptions | None): Solver settings; defaults when None.
        tolerances (Tolerances): Envelope and projection tolerances.

    Returns:
        SolveReport: Dual and primal solutions, duality product, feasibility
            residual and the trace. `converged` is False when the cap is hit,
            so a converged report always meets the feasibility tolerance.

    Raises:
        LineSearchError: If backtracking exhausts its halvings.
        RecoveryError: If the primal point cannot be recovered.
    """
    opts = opts or SolverOptions()

    y = project_dual_feasible(p, dual_start(p), tolerances=tolerances)
    value, gradient = dual_objective(p, y, tolerances=tolerances)
    step = _clip(1.0 / max(float(np.linalg.norm(gradient)), 1e-12), opts)

    records: list[IterationRecord] = []
    converged = False

    for iteration in range(opts.max_iterations):
        (candidate, new_value, new_gradient), accepted = _armijo_step(
            p,
            _Iterate(y, value, gradient),
            step,
            opts,
            tolerances,
        )
        move = candidate - y
        records.append(
            IterationRecord(
                iteration=iteration,
                objective=new_value,
                step=accepted,
                grad_norm=float(np.linalg.norm(new_gradient)),
            ),
        )
        if iteration % opts.log_every == 0:
            logger.debug("Gauge dual iteration %d: %.12g", iteration, new_value)

        step = _barzilai_borwein(move, new_gradient - gradient, opts)
        threshold = opts.step_tol * (1 + float(np.linalg.norm(y)))
        small = float(np.linalg.norm(move)) <= threshold
        y, value, gradient = candidate, new_value, new_gradient
        if small and _primal_feasible(p, y, value, opts):
            converged = True
            break

    primal = recover_primal(p, y, value)
    primal_value = primal_objective(p, primal)
    trace = IterationTrace(
        records=tuple(records),
        converged=converged,
        stop_reason=(
            "step and feasibility tolerances met"
            if converged
            else "iteration cap reached"
        ),
    )
    _log_outcome("Gauge dual", trace, value)

    return SolveReport(
        method="gauge_dual",
        dual_solution=y,
        dual_value=value,
        primal_solution=primal,
        primal_value=primal_value,
        duality_product=primal_value * value,
        feasibility_residual=feasibility_residual(p, primal),
        converged=converged,
        trace=trace,
    )


def recover_primal(p: GaugeDualProblem, y: Vector, value: float) -> Vector:
    """
    Recovers the primal solution from a dual solution and its objective value.

    Args:
        p (GaugeDualProblem): The problem.
        y (Vector): Dual solution.
        value (float): Dual objective at y, positive.

    Returns:
        Vector: (1/r) / (kappa(u) + alpha |u|) * u with u = prox_{r kappa}(A^T y).

    Raises:
        RecoveryError: If the dual value is not positive or u vanishes.
    """
    if not value > 0:
        raise RecoveryError(f"dual value {value} is not positive")

    u = moreau_prox(p.kappa, value, p.A.T @ y)
    scale = p.kappa.evaluate(u) + p.alpha * float(np.linalg.norm(u))
    if not (np.isfinite(scale) and scale > 0):
        raise RecoveryError("proximal point of the dual solution is degenerate")
    return (1 / value) / scale * u


def solve_lagrange_baseline(
    p: GaugeDualProblem,
    opts: SolverOptions | None = None,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SolveReport:
    """
    Solves the Lagrange dual of the strongly convex regularisation

        minimise kappa(x) + (alpha/2)|x|^2  subject to  rho(b - A x) <= sigma,

    namely maximise <b, y> - (1/2 alpha) dist^2_[kappa° <= 1](A^T y) - sigma rho°(y),
    by proximal gradient (FISTA with adaptive restart when `accelerated`) with
    step alpha / |A|^2, and recovers x = prox_{kappa/alpha}(A^T y / alpha).

    The run stops once the gradient mapping |y+ - w| / t falls below
    step_tol (1 + |b|).

    Args:
        p (GaugeDualProblem): The problem.
        opts (SolverOptions | None): Solver settings; defaults when None.
        tolerances (Tolerances): Projection tolerances.

    Returns:
        SolveReport: Dual and primal solutions with `duality_product` None.
    """
    opts = opts or SolverOptions()
    step = p.alpha / float(np.linalg.norm(p.A, 2)) ** 2
    stop = opts.step_tol * (1 + float(np.linalg.norm(p.b)))

    y = np.zeros(p.shape[0])
    extrapolated, momentum = y.copy(), 1.0
    records: list[IterationRecord] = []
    converged = False

    for iteration in range(opts.max_iterations):
        gradient = _lagrange_gradient(p, extrapolated, tolerances)
        candidate = _residual_prox(p, extrapolated - step * gradient, step)
        mapping = float(np.linalg.norm(candidate - extrapolated)) / step

        if opts.accelerated and float((extrapolated - candidate) @ (candidate - y)) > 0:
            momentum = 1.0
        next_momentum = (1 + np.sqrt(1 + 4 * momentum**2)) / 2
        weight = (momentum - 1) / next_momentum if opts.accelerated else 0.0
        extrapolated = candidate + weight * (candidate - y)
        y, momentum = candidate, next_momentum

        objective = lagrange_dual_value(p, y, tolerances=tolerances)
        records.append(
            IterationRecord(
                iteration=iteration,
                objective=objective,
                step=step,
                grad_norm=mapping,
            ),
        )
        if iteration % opts.log_every == 0:
            logger.debug("Lagrange iteration %d: objective %.12g", iteration, objective)
        if mapping <= stop:
            converged = True
            break

    primal = moreau_prox(p.kappa, 1 / p.alpha, p.A.T @ y / p.alpha)
    trace = IterationTrace(
        records=tuple(records),
        converged=converged,
        stop_reason="mapping tolerance met" if converged else "iteration cap reached",
    )
    value = lagrange_dual_value(p, y, tolerances=tolerances)
    _log_outcome("Lagrange baseline", trace, value)

    return SolveReport(
        method="lagrange",
        dual_solution=y,
        dual_value=value,
        primal_solution=primal,
        primal_value=p.kappa.evaluate(primal) + p.alpha / 2 * float(primal @ primal),
        duality_product=None,
        feasibility_residual=feasibility_residual(p, primal),
        converged=converged,
        trace=trace,
    )


def lagrange_dual_value(
    p: GaugeDualProblem,
    y: Vector,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """
    Evaluates <b, y> - (1/2 alpha) dist^2_[kappa° <= 1](A^T y) - sigma rho°(y).
    """
    v = p.A.T @ y
    gap = v - p.kappa_polar.project_level_set(v, 1.0)
    penalty = p.sigma * p.rho_polar.evaluate(y) if p.sigma > 0 else 0.0
    return float(p.b @ y) - float(gap @ gap) / (2 * p.alpha) - penalty


def _lagrange_gradient(
    p: GaugeDualProblem,
    y: Vector,
    tolerances: Tolerances,
) -> Vector:
    """
    Gradient of the smooth part -<b, y> + (1/2 alpha) dist^2(A^T y) of the
    negated dual.
    """
    v = p.A.T @ y
    gap = v - p.kappa_polar.project_level_set(v, 1.0)
    return p.A @ gap / p.alpha - p.b


def _residual_prox(p: GaugeDualProblem, y: Vector, step: float) -> Vector:
    if p.sigma == 0:
        return y
    return moreau_prox(p.rho_polar, step * p.sigma, y)


def _armijo_step(
    p: GaugeDualProblem,
    current: _Iterate,
    step: float,
    opts: SolverOptions,
    tolerances: Tolerances,
) -> tuple[_Iterate, float]:
    """
    Backtracks from `step` until the projected trial point meets the Armijo
    condition; nondifferentiable trial points count as failures.
    """
    y, value, gradient = current
    trial = step
    for _ in range(opts.max_halvings):
        candidate = project_dual_feasible(
            p,
            y - trial * gradient,
            tolerances=tolerances,
        )
        try:
            new_value, new_gradient = dual_objective(
                p,
                candidate,
                tolerances=tolerances,
            )
        except NondifferentiableError:
            trial *= opts.backtrack
            continue
        if new_value <= value + opts.armijo_c1 * float(gradient @ (candidate - y)):
            return _Iterate(candidate, new_value, new_gradient), trial
        trial *= opts.backtrack

    raise LineSearchError(
        f"Armijo backtracking failed after {opts.max_halvings} halvings",
        last_iterate=y,
        residual=dual_value(p, y, tolerances=tolerances),
    )


def _primal_feasible(
    p: GaugeDualProblem,
    y: Vector,
    value: float,
    opts: SolverOptions,
) -> bool:
    residual = feasibility_residual(p, recover_primal(p, y, value))
    bound = opts.feas_rel * (1 + float(np.linalg.norm(p.b)))
    if residual > bound:
        logger.debug(
            "Gauge dual step is small but residual %.3e exceeds %.3e",
            residual,
            bound,
        )
        return False
    return True


def _barzilai_borwein(move: Vector, change: Vector, opts: SolverOptions) -> float:
    curvature = float(move @ change)
    if curvature <= 0:
        return opts.bb_max
    return _clip(float(move @ move) / curvature, opts)


def _clip(step: float, opts: SolverOptions) -> float:
    return min(max(step, opts.bb_min), opts.bb_max)


def _log_outcome(name: str, trace: IterationTrace, value: float) -> None:
    if trace.converged:
        logger.info(
            "%s converged after %d iterations: objective %.12g",
            name,
            len(trace.records),
            value,
        )
    else:
        logger.warning(
            "%s stopped without converging after %d iterations: objective %.12g",
            name,
            len(trace.records),
            value,
        )
