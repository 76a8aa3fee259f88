# duality/problem.py

import logging
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import bisect

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.envelope import polar_envelope, polar_envelope_gradient
from polar_gauge.errors import BracketError, CapabilityError, NondifferentiableError
from polar_gauge.gauges import Gauge

logger = logging.getLogger(__name__)

SUPPORTED_RESIDUAL_KINDS = frozenset({"zero_indicator", "l2"})


@dataclass(frozen=True, slots=True)
class GaugeDualProblem:
    """
    The regularised gauge problem

        minimise kappa(x) + alpha |x|  subject to  rho(b - A x) <= sigma

    together with its smooth gauge dual

        minimise (kappa° ◇ (1/alpha)|.|)(A^T y)
        subject to <b, y> - sigma rho°(y) >= 1.

    Args:
        kappa (Gauge): Objective gauge with closed-form polar and Moreau prox.
        rho (Gauge): Residual gauge, the origin indicator or the l2 norm.
        A (NDArray[np.float64]): Dense m x n matrix.
        b (Vector): Nonzero right-hand side of length m.
        sigma (float): Residual budget in [0, rho(b)).
        alpha (float): Regularisation weight, positive.

    Raises:
        ValueError: On shape mismatches, b = 0, or sigma outside [0, rho(b)).
        CapabilityError: If rho is not a supported residual gauge, or kappa has
            no closed-form polar.
    """

    kappa: Gauge
    rho: Gauge
    A: NDArray[np.float64]
    b: Vector
    sigma: float = 0.0
    alpha: float = 0.1
    kappa_polar: Gauge = field(init=False, repr=False)
    rho_polar: Gauge = field(init=False, repr=False)

    def __post_init__(self) -> None:
        matrix = np.array(self.A, dtype=np.float64)
        if matrix.ndim != 2 or not np.all(np.isfinite(matrix)):
            raise ValueError("A must be a finite two-dimensional array")
        rows, cols = matrix.shape
        rhs = as_vector(self.b, rows)

        if self.kappa.dim != cols or self.rho.dim != rows:
            raise ValueError(
                f"gauge dimensions ({self.kappa.dim}, {self.rho.dim}) do not match "
                f"A of shape {matrix.shape}",
            )
        if not np.any(rhs):
            raise ValueError("b must be nonzero")
        if self.rho.kind not in SUPPORTED_RESIDUAL_KINDS:
            raise CapabilityError(f"unsupported residual gauge '{self.rho.kind}'")
        if not 0 <= self.sigma < self.rho.evaluate(rhs):
            raise ValueError(f"sigma must lie in [0, rho(b)), got {self.sigma}")

        object.__setattr__(self, "A", matrix)
        object.__setattr__(self, "b", rhs)
        object.__setattr__(self, "alpha", require_positive(self.alpha, "alpha"))
        object.__setattr__(self, "kappa_polar", self.kappa.polar())
        object.__setattr__(self, "rho_polar", self.rho.polar())

    @property
    def shape(self) -> tuple[int, int]:
        """(m, n) shape of A."""
        return self.A.shape


def dual_value(
    p: GaugeDualProblem,
    y: ArrayLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """
    Evaluates the gauge-dual objective (kappa°)_alpha(A^T y).
    """
    point = as_vector(y, p.shape[0])
    return polar_envelope(p.kappa_polar, p.alpha, p.A.T @ point, tolerances=tolerances)


def dual_objective(
    p: GaugeDualProblem,
    y: ArrayLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[float, Vector]:
    """
    Evaluates the gauge-dual objective and its gradient A grad(kappa°)_alpha(A^T y).

    Args:
        p (GaugeDualProblem): The problem.
        y (ArrayLike): Dual point of length m.
        tolerances (Tolerances): Envelope tolerances.

    Returns:
        tuple[float, Vector]: Objective value and gradient.

    Raises:
        NondifferentiableError: If the objective is numerically zero at y; the
            caller should perturb y or shorten the step.
    """
    point = as_vector(y, p.shape[0])
    try:
        result = polar_envelope_gradient(
            p.kappa_polar,
            p.alpha,
            p.A.T @ point,
            tolerances=tolerances,
        )
    except NondifferentiableError as error:
        raise NondifferentiableError(
            f"dual objective is not differentiable here, perturb y ({error})",
            value=error.value,
        ) from error
    return result.value, p.A @ result.gradient


def project_dual_feasible(
    p: GaugeDualProblem,
    y: ArrayLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Vector:
    """
    Projects onto the dual feasible set {y : <b, y> - sigma rho°(y) >= 1}.

    With sigma = 0 (or rho the origin indicator) the set is the halfspace
    <b, y> >= 1. For rho = l2 and sigma > 0 the projection has the form
    y(theta) = (|q| - theta sigma)_+ q / |q| with q = y + theta b, and the
    multiplier theta > 0 is found by bisection on the constraint.

    Args:
        p (GaugeDualProblem): The problem.
        y (ArrayLike): Point to project.
        tolerances (Tolerances): Bisection tolerances.

    Returns:
        Vector: The projection.
    """
    point = as_vector(y, p.shape[0])
    if p.sigma == 0 or p.rho.kind == "zero_indicator":
        shortfall = 1 - float(p.b @ point)
        if shortfall <= 0:
            return point
        return point + (shortfall / float(p.b @ p.b)) * p.b

    if constraint_margin(p, point) >= 0:
        return point

    def shifted(theta: float) -> Vector:
        q = point + theta * p.b
        norm = float(np.linalg.norm(q))
        if norm == 0:
            return np.zeros_like(q)
        return max(norm - theta * p.sigma, 0.0) / norm * q

    def margin(theta: float) -> float:
        return constraint_margin(p, shifted(theta))

    upper = 1.0
    for _ in range(tolerances.max_bracket_doublings):
        if margin(upper) >= 0:
            break
        upper *= 2
    else:
        raise BracketError(
            "dual feasibility multiplier not bracketed",
            residual=margin(upper),
        )

    xtol = tolerances.root_xtol_rel * (1 + upper)
    theta = bisect(
        margin,
        0.0,
        upper,
        xtol=xtol,
        maxiter=tolerances.root_max_iterations,
    )

    # round the multiplier up so the result is feasible
    return shifted(min(theta + xtol, upper))


def constraint_margin(p: GaugeDualProblem, y: Vector) -> float:
    """
    Returns <b, y> - sigma rho°(y) - 1, nonnegative on the dual feasible set.
    """
    penalty = p.sigma * p.rho_polar.evaluate(y) if p.sigma > 0 else 0.0
    return float(p.b @ y) - penalty - 1


def dual_start(p: GaugeDualProblem) -> Vector:
    """
    Feasible starting point s * b with the dual constraint active.

    Args:
        p (GaugeDualProblem): The problem.

    Returns:
        Vector: b / |b|^2 when sigma = 0, else b / (|b| (|b| - sigma)) for l2.
    """
    norm = float(np.linalg.norm(p.b))
    if p.sigma == 0 or p.rho.kind == "zero_indicator":
        return p.b / norm**2
    return p.b / (norm * (norm - p.sigma))


def primal_objective(p: GaugeDualProblem, x: ArrayLike) -> float:
    """
    Evaluates kappa(x) + alpha |x|.
    """
    point = as_vector(x, p.shape[1])
    return p.kappa.evaluate(point) + p.alpha * float(np.linalg.norm(point))


def feasibility_residual(p: GaugeDualProblem, x: ArrayLike) -> float:
    """
    Constraint violation of a primal point: |b - A x| for the origin indicator,
    max{rho(b - A x) - sigma, 0} otherwise.
    """
    point = as_vector(x, p.shape[1])
    residual = p.b - p.A @ point
    if p.rho.kind == "zero_indicator":
        return float(np.linalg.norm(residual))
    return max(p.rho.evaluate(residual) - p.sigma, 0.0)
