# perspective/lifted.py

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import bisect

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.errors import BracketError
from polar_gauge.gauges import Gauge, dykstra_project, halfspace_cone
from polar_gauge.gauges.norms import project_weighted_l1_ball
from polar_gauge.oracle import grid_minimize
from polar_gauge.schemas import GridSpec, LiftedDescriptor

logger = logging.getLogger(__name__)

type BatchEvaluator = Callable[[NDArray[np.float64]], NDArray[np.float64]]
type LevelProjector = Callable[[Vector, float], Vector]
type Projector = Callable[[Vector], Vector]

# tolerances for lifted gauges whose level projection comes from a grid search
GRID_TOLERANCES = DEFAULT_TOLERANCES.with_overrides(
    {"root_xtol_rel": 1e-11, "residual_rel": 1e-5},
)

_MULTIPLIER_GRID_POINTS = 41
_MULTIPLIER_GRID_ROUNDS = 9


@dataclass(frozen=True, slots=True)
class LiftedFunction:
    """
    A nonnegative closed convex function f with inf f > 0 and its perspective

        f^π(x, λ) = λ f(x / λ)  for λ > 0,
                    rec f(x)    for λ = 0,
                    +inf        for λ < 0,

    which is a gauge on the lifted space of pairs (x, λ).

    Args:
        kind (str): Family name.
        dim (int): Dimension of x.
        base_eval (BatchEvaluator): f on a (k, dim) batch, +inf off its domain.
        recession_eval (BatchEvaluator): rec f on a (k, dim) batch.
        lifted_level_projection (LevelProjector): Projection of a lifted point
            onto [f^π <= r].
        lifted_domain_projection (Projector | None): Projection onto the closure
            of dom f^π; None when it is the halfspace λ >= 0.
        infimum (float): inf f, positive.
        minimizer (Vector): A point of argmin f.
        tolerances (Tolerances): Tolerances for envelope computations.
        params (dict[str, float]): Construction parameters.
    """

    kind: str
    dim: int
    base_eval: BatchEvaluator
    recession_eval: BatchEvaluator
    lifted_level_projection: LevelProjector
    lifted_domain_projection: Projector | None
    infimum: float
    minimizer: Vector
    tolerances: Tolerances = DEFAULT_TOLERANCES
    params: dict[str, float] = field(default_factory=dict)

    def perspective_many(self, points: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Evaluates f^π row-wise on a (k, dim + 1) batch of lifted points.
        """
        x, lam = points[:, :-1], points[:, -1]
        positive = lam > 0
        safe = np.where(positive, lam, 1.0)[:, np.newaxis]

        with np.errstate(invalid="ignore"):
            scaled = np.where(positive, lam * self.base_eval(x / safe), 0.0)
        values = np.where(positive, scaled, self.recession_eval(x))
        return np.where(lam < 0, np.inf, values)

    def perspective(self, x: ArrayLike, lam: float) -> float:
        """
        Evaluates f^π(x, lam) at a single pair.
        """
        point = np.append(as_vector(x, self.dim), float(lam))
        return float(self.perspective_many(point[np.newaxis, :])[0])

    def evaluate(self, x: ArrayLike) -> float:
        """
        Evaluates f(x).
        """
        point = as_vector(x, self.dim)
        return float(self.base_eval(point[np.newaxis, :])[0])

    def as_gauge(self) -> Gauge:
        """
        Returns f^π as a gauge on R^(dim + 1).
        """
        return Gauge(
            kind="perspective",
            dim=self.dim + 1,
            evaluate_many=self.perspective_many,
            level_projector=self.lifted_level_projection,
            domain_projector=self.lifted_domain_projection or _nonnegative_multiplier,
            is_continuous=False,
            params={"base": self.kind},
        )


def make_shifted_l1(c: float, dim: int) -> LiftedFunction:
    """
    Builds f(x) = |x|_1 + c, whose perspective is |x|_1 + c λ for λ >= 0.

    inf f = c is attained at 0. The lifted level set {λ >= 0, |z|_1 + c λ <= r}
    is a weighted l1 ball cut by λ >= 0, so its projection is the weighted l1
    ball projection of (z, max(λ, 0)) with weights (1, ..., 1, c).

    Args:
        c (float): Positive shift.
        dim (int): Dimension of x.

    Returns:
        LiftedFunction: The shifted l1 function.
    """
    shift = require_positive(c, "c")
    if dim < 1:
        raise ValueError(f"dimension must be at least 1, got {dim}")
    weights = np.append(np.ones(dim), shift)

    def base_eval(points: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.abs(points).sum(axis=1) + shift

    def recession_eval(points: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.abs(points).sum(axis=1)

    def level_projection(p: Vector, radius: float) -> Vector:
        return project_weighted_l1_ball(_nonnegative_multiplier(p), weights, radius)

    return LiftedFunction(
        kind="shifted_l1",
        dim=dim,
        base_eval=base_eval,
        recession_eval=recession_eval,
        lifted_level_projection=level_projection,
        lifted_domain_projection=None,
        infimum=shift,
        minimizer=np.zeros(dim),
        params={"c": shift},
    )


def make_smoothed_halfspace(
    epsilon: float = 0.5,
    offset: float = 1.0,
) -> LiftedFunction:
    """
    Builds the two-dimensional function

        f(x) = sqrt(|x|_1^2 + epsilon |x|^2) + indicator{x_1 >= offset},

    strongly convex on its domain, with inf f = offset sqrt(1 + epsilon) at
    (offset, 0). Its perspective is kappa(z) = sqrt(|z|_1^2 + epsilon |z|^2) on
    the cone {μ >= 0, z_1 >= μ offset}.

    The domain projection runs Dykstra over the two halfspace cones. The level
    projection minimises over the multiplier μ with a refined one-dimensional
    grid; for fixed μ the best z is the projection onto the kappa ball of radius
    r cut by z_1 >= μ offset, which has a closed form up to one bisection.

    Args:
        epsilon (float): Strong convexity weight, positive.
        offset (float): Halfspace offset, positive.

    Returns:
        LiftedFunction: The smoothed halfspace function.
    """
    eps = require_positive(epsilon, "epsilon")
    shift = require_positive(offset, "offset")

    def kappa_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
        l1 = np.abs(points).sum(axis=1)
        return np.sqrt(l1**2 + eps * np.sum(points**2, axis=1))

    def base_eval(points: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.where(points[:, 0] >= shift, kappa_many(points), np.inf)

    def recession_eval(points: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.where(points[:, 0] >= 0, kappa_many(points), np.inf)

    cones = (
        halfspace_cone([0.0, 0.0, -1.0]),
        halfspace_cone([-1.0, 0.0, shift]),
    )

    def domain_projection(p: Vector) -> Vector:
        return dykstra_project(p, [cone.project for cone in cones])

    def level_projection(p: Vector, radius: float) -> Vector:
        return _smoothed_level_projection(p, radius, eps, shift)

    return LiftedFunction(
        kind="smoothed_halfspace",
        dim=2,
        base_eval=base_eval,
        recession_eval=recession_eval,
        lifted_level_projection=level_projection,
        lifted_domain_projection=domain_projection,
        infimum=shift * float(np.sqrt(1 + eps)),
        minimizer=np.array([shift, 0.0]),
        tolerances=GRID_TOLERANCES,
        params={"epsilon": eps, "offset": shift},
    )


def lifted_from_descriptor(descriptor: LiftedDescriptor) -> LiftedFunction:
    """
    Builds a lifted function from its declarative description.

    Args:
        descriptor (LiftedDescriptor): Validated descriptor.

    Returns:
        LiftedFunction: The described function.

    Raises:
        ValueError: On unknown params or a smoothed halfspace that is not
            two-dimensional.
    """
    params = dict(descriptor.params)
    if descriptor.kind == "shifted_l1":
        _reject_unknown(params, {"c"})
        return make_shifted_l1(params.get("c", 1.0), descriptor.dim)

    _reject_unknown(params, {"epsilon", "offset"})
    if descriptor.dim != 2:
        raise ValueError("the smoothed halfspace function is two-dimensional")
    return make_smoothed_halfspace(
        params.get("epsilon", 0.5),
        params.get("offset", 1.0),
    )


def project_kappa_ball(
    z: Vector,
    radius: float,
    epsilon: float,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Vector:
    """
    Projects a planar point onto {z : |z|_1^2 + epsilon |z|^2 <= radius^2}.

    Inside each quadrant the set is an ellipse z^T M z <= r^2 with
    M = [[1 + eps, 1], [1, 1 + eps]]; the projection keeps the sign pattern of
    z, so it is found in the quadrant of |z| by bisection on the multiplier of
    the ellipse constraint, falling back to the axes when the ellipse
    projection leaves the quadrant.

    Args:
        z (Vector): Point in the plane.
        radius (float): Ball radius, nonnegative.
        epsilon (float): Strong convexity weight.
        tolerances (Tolerances): Supplies the multiplier bracket doubling cap.

    Returns:
        Vector: The projection.

    Raises:
        BracketError: If no multiplier bracket is found within
            `max_bracket_doublings` doublings.
    """
    a = np.abs(z)
    if (a.sum() ** 2 + epsilon * float(a @ a)) <= radius**2:
        return z.copy()
    if radius == 0:
        return np.zeros_like(z)

    mean, half_diff = (a[0] + a[1]) / 2, (a[0] - a[1]) / 2

    def projected(nu: float) -> Vector:
        along = mean / (1 + nu * (2 + epsilon))
        across = half_diff / (1 + nu * epsilon)
        return np.array([along + across, along - across])

    def excess(nu: float) -> float:
        u = projected(nu)
        return (u.sum() ** 2 + epsilon * float(u @ u)) - radius**2

    upper, history = 1.0, [1.0]
    for _ in range(tolerances.max_bracket_doublings):
        if excess(upper) <= 0:
            break
        upper *= 2
        history.append(upper)
    else:
        raise BracketError(
            f"no ellipse multiplier bracket below {upper:.3e}",
            residual=excess(upper),
            history=history,
        )
    candidate = projected(bisect(excess, 0.0, upper, xtol=1e-15 * (1 + upper)))

    if np.any(candidate < 0):
        reach = radius / np.sqrt(1 + epsilon)
        axes = np.array([[min(a[0], reach), 0.0], [0.0, min(a[1], reach)]])
        candidate = axes[int(np.argmin(np.linalg.norm(axes - a, axis=1)))]

    return np.sign(z) * candidate


def _smoothed_level_projection(
    p: Vector,
    radius: float,
    epsilon: float,
    offset: float,
) -> Vector:
    """
    Projects (z0, μ0) onto {κ(z) <= r, μ >= 0, z_1 >= μ offset} by a refined
    grid over μ in [0, r / (offset sqrt(1 + eps))].
    """
    z0, mu0 = p[:2], float(p[2])
    ball = project_kappa_ball(z0, radius, epsilon)
    mu_max = float(radius / (offset * np.sqrt(1 + epsilon)))
    if mu_max == 0:
        return np.zeros(3)

    def best_split(mus: NDArray[np.float64]) -> NDArray[np.float64]:
        t = mus * offset
        # half chord of the ball along the line z_1 = t
        disc = np.maximum(t**2 - (1 + epsilon) * ((1 + epsilon) * t**2 - radius**2), 0)
        chord = (np.sqrt(disc) - t) / (1 + epsilon)
        on_line = np.column_stack([t, np.clip(z0[1], -chord, chord)])
        use_ball = ball[0] >= t
        return np.where(use_ball[:, np.newaxis], ball, on_line)

    def cost(mus: NDArray[np.float64]) -> NDArray[np.float64]:
        flat = mus[:, 0]
        splits = best_split(flat)
        value = np.sum((splits - z0) ** 2, axis=1) + (flat - mu0) ** 2
        feasible = (flat >= 0) & (flat <= mu_max)
        return np.where(feasible, value, np.inf)

    grid = GridSpec(
        lower=(0.0,),
        upper=(mu_max,),
        points=_MULTIPLIER_GRID_POINTS,
        rounds=_MULTIPLIER_GRID_ROUNDS,
    )
    mu = float(grid_minimize(cost, grid, vectorized=True).point[0])
    return np.append(best_split(np.array([mu]))[0], mu)


def _nonnegative_multiplier(p: Vector) -> Vector:
    projected = p.copy()
    projected[-1] = max(projected[-1], 0.0)
    return projected


def _reject_unknown(params: dict[str, float], allowed: set[str]) -> None:
    unknown = set(params) - allowed
    if unknown:
        raise ValueError(f"unknown lifted param(s): {', '.join(sorted(unknown))}")
