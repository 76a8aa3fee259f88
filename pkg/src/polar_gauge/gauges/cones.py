# gauges/cones.py

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from polar_gauge._utils import Vector, as_vector
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.errors import ConvergenceError

from .base import Gauge

logger = logging.getLogger(__name__)

type ConeProjector = Callable[[NDArray[np.float64]], NDArray[np.float64]]

_DUAL_CONE_SAMPLES = 64


@dataclass(frozen=True, slots=True)
class ConeSpec:
    """
    A closed convex cone given by its Euclidean projection.

    The projector must act row-wise, accepting either a single point of shape
    (d,) or a batch of shape (k, d).

    Args:
        name (str): Human readable name.
        dim (int): Ambient dimension.
        project (ConeProjector): Projection onto the cone.
    """

    name: str
    dim: int
    project: ConeProjector

    def project_polar(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        """
        Projects onto the polar cone via the Moreau decomposition.

        Args:
            x (NDArray[np.float64]): Point or batch of points.

        Returns:
            NDArray[np.float64]: x - P_K(x).
        """
        return x - self.project(x)

    def polar_cone(self) -> "ConeSpec":
        """
        Returns the polar cone as a ConeSpec.
        """
        return ConeSpec(f"polar({self.name})", self.dim, self.project_polar)

    def contains_many(
        self,
        points: NDArray[np.float64],
        tolerances: Tolerances = DEFAULT_TOLERANCES,
    ) -> NDArray[np.bool_]:
        """
        Tests cone membership row-wise, up to `feas_rel * (1 + |x|)`.

        Args:
            points (NDArray[np.float64]): Batch of shape (k, d).
            tolerances (Tolerances): Membership tolerance source.

        Returns:
            NDArray[np.bool_]: Membership mask of length k.
        """
        gap = np.linalg.norm(points - self.project(points), axis=1)
        scale = 1 + np.linalg.norm(points, axis=1)
        return gap <= tolerances.feas_rel * scale


def orthant_cone(dim: int) -> ConeSpec:
    """
    Returns the nonnegative orthant of the given dimension.
    """
    return ConeSpec("orthant", dim, lambda x: np.maximum(x, 0.0))


def halfspace_cone(normal: ArrayLike) -> ConeSpec:
    """
    Returns the halfspace cone {x : <a, x> <= 0} through the origin.

    Args:
        normal (ArrayLike): Outward normal a, nonzero.

    Returns:
        ConeSpec: The halfspace cone.

    Raises:
        ValueError: If the normal is zero.
    """
    a = as_vector(normal)
    norm_sq = float(a @ a)
    if norm_sq == 0:
        raise ValueError("halfspace normal must be nonzero")

    def project(x: NDArray[np.float64]) -> NDArray[np.float64]:
        excess = np.maximum(x @ a, 0.0) / norm_sq
        return x - np.multiply.outer(excess, a)

    return ConeSpec("halfspace", a.size, project)


def dykstra_project(
    x: ArrayLike,
    projections: Sequence[Callable[[Vector], Vector]],
    *,
    tol: float | None = None,
    max_sweeps: int | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Vector:
    """
    Projects x onto the intersection of closed convex sets by Dykstra's
    alternating projections.

    Stops once a full sweep moves the iterate by less than
    `tol` (default `dykstra_tol * (1 + |x|)`).

    Args:
        x (ArrayLike): Point to project.
        projections (Sequence[Callable[[Vector], Vector]]): One projector per set.
        tol (float | None): Absolute stopping tolerance override.
        max_sweeps (int | None): Sweep cap override.
        tolerances (Tolerances): Default tolerance source.

    Returns:
        Vector: The projection onto the intersection.

    Raises:
        ValueError: If no projector is given.
        ConvergenceError: If the sweep cap is reached first; carries the last
            iterate and the last sweep movement.
    """
    point = as_vector(x)
    if not projections:
        raise ValueError("at least one projection is required")
    if len(projections) == 1:
        return projections[0](point)

    if tol is None:
        tol = tolerances.dykstra_tol * (1 + float(np.linalg.norm(point)))
    if max_sweeps is None:
        max_sweeps = tolerances.dykstra_max_sweeps

    current = point
    increments = [np.zeros_like(point) for _ in projections]
    movement = np.inf

    for sweep in range(1, max_sweeps + 1):
        previous = current
        for index, project in enumerate(projections):
            shifted = current + increments[index]
            current = project(shifted)
            increments[index] = shifted - current

        movement = float(np.linalg.norm(current - previous))
        if movement < tol:
            logger.debug("Dykstra converged after %d sweeps", sweep)
            return current

    raise ConvergenceError(
        f"Dykstra projection did not converge within {max_sweeps} sweeps",
        last_iterate=current,
        residual=movement,
    )


def make_linear_cone_gauge(
    c: ArrayLike,
    cone: ConeSpec,
    *,
    verify: bool = True,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Gauge:
    """
    Builds the gauge kappa(x) = <c, x> + indicator_K(x).

    The coefficient vector must lie in the dual cone of K so that kappa is
    nonnegative; when `verify` is set this is checked on a fixed sample of cone
    points.

    Args:
        c (ArrayLike): Linear coefficients.
        cone (ConeSpec): The cone K.
        verify (bool): Whether to run the sampled dual-cone check.
        tolerances (Tolerances): Membership and Dykstra tolerances.

    Returns:
        Gauge: The linear-over-cone gauge.

    Raises:
        ValueError: If c has the wrong length or fails the dual-cone check.
    """
    coeffs = as_vector(c, cone.dim)
    if verify:
        _check_dual_cone(coeffs, cone, tolerances)

    kind = "cone_indicator" if not np.any(coeffs) else "linear_cone"

    def evaluate_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
        inside = cone.contains_many(points, tolerances)
        values = np.maximum(points @ coeffs, 0.0)
        return np.where(inside, values, np.inf)

    def level_projector(x: Vector, radius: float) -> Vector:
        if kind == "cone_indicator":
            return cone.project(x)
        return dykstra_project(
            x,
            [cone.project, _halfspace_projector(coeffs, radius)],
            tolerances=tolerances,
        )

    def prox_operator(t: float, x: Vector) -> Vector:
        return cone.project(x - t * coeffs)

    polar_factory = None
    if kind == "cone_indicator":

        def polar_factory() -> Gauge:
            return make_cone_indicator(cone.polar_cone(), tolerances=tolerances)

    return Gauge(
        kind=kind,
        dim=cone.dim,
        evaluate_many=evaluate_many,
        level_projector=level_projector,
        domain_projector=cone.project,
        polar_factory=polar_factory,
        prox_operator=prox_operator,
        is_continuous=False,
        params={"c": coeffs, "cone": cone},
    )


def make_cone_indicator(
    cone: ConeSpec,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Gauge:
    """
    Builds the indicator of a closed convex cone, whose polar is the indicator of
    the polar cone and whose Moreau prox is the cone projection.

    Args:
        cone (ConeSpec): The cone K.
        tolerances (Tolerances): Membership tolerance source.

    Returns:
        Gauge: indicator_K.
    """
    return make_linear_cone_gauge(
        np.zeros(cone.dim),
        cone,
        verify=False,
        tolerances=tolerances,
    )


def _halfspace_projector(
    normal: Vector,
    level: float,
) -> Callable[[Vector], Vector]:
    norm_sq = float(normal @ normal)

    def project(x: Vector) -> Vector:
        excess = float(x @ normal) - level
        if excess <= 0:
            return x
        return x - (excess / norm_sq) * normal

    return project


def _check_dual_cone(c: Vector, cone: ConeSpec, tolerances: Tolerances) -> None:
    rng = np.random.default_rng(0)
    samples = cone.project(rng.standard_normal((_DUAL_CONE_SAMPLES, cone.dim)))
    products = samples @ c
    scale = np.linalg.norm(samples, axis=1) * np.linalg.norm(c)
    if np.any(products < -tolerances.feas_rel * (1 + scale)):
        raise ValueError("c must lie in the dual cone of K")
