# gauges/catalog.py

import logging

import numpy as np
from numpy.typing import NDArray

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.schemas import GaugeDescriptor

from .base import Gauge
from .cones import (
    ConeSpec,
    halfspace_cone,
    make_cone_indicator,
    make_linear_cone_gauge,
    orthant_cone,
)
from .norms import make_norm_gauge

logger = logging.getLogger(__name__)


def make_zero_indicator(
    dim: int,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Gauge:
    """
    Builds the indicator of the origin, the residual gauge of equality
    constraints. Its polar is the identically zero gauge.

    Args:
        dim (int): Ambient dimension.
        tolerances (Tolerances): Tolerance for recognising the origin.

    Returns:
        Gauge: indicator_{0}.
    """

    def evaluate_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
        at_origin = np.linalg.norm(points, axis=1) <= tolerances.feas_rel
        return np.where(at_origin, 0.0, np.inf)

    def to_origin(x: Vector, *_: object) -> Vector:
        return np.zeros_like(x)

    return Gauge(
        kind="zero_indicator",
        dim=dim,
        evaluate_many=evaluate_many,
        level_projector=to_origin,
        domain_projector=to_origin,
        polar_factory=lambda: make_null_gauge(dim, tolerances=tolerances),
        prox_operator=lambda _, x: np.zeros_like(x),
        is_continuous=False,
    )


def make_null_gauge(
    dim: int,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Gauge:
    """
    Builds the identically zero gauge, polar to the indicator of the origin.

    Args:
        dim (int): Ambient dimension.
        tolerances (Tolerances): Passed on to the polar.

    Returns:
        Gauge: The zero function.
    """

    def evaluate_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.zeros(len(points))

    return Gauge(
        kind="null",
        dim=dim,
        evaluate_many=evaluate_many,
        level_projector=lambda x, _: x.copy(),
        polar_factory=lambda: make_zero_indicator(dim, tolerances=tolerances),
        prox_operator=lambda _, x: x.copy(),
    )


def scale_gauge(g: Gauge, factor: float) -> Gauge:
    """
    Builds t * kappa for t > 0.

    Level sets, polar and prox follow from the scaling: [t kappa <= r] =
    [kappa <= r / t], (t kappa)° = kappa° / t and prox_{s t kappa} uses s * t.

    Args:
        g (Gauge): Base gauge.
        factor (float): Positive multiplier t.

    Returns:
        Gauge: The scaled gauge, of kind "scaled".
    """
    t = require_positive(factor, "factor")

    def evaluate_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
        return t * g.evaluate_many(points)

    def level_projector(x: Vector, radius: float) -> Vector:
        return g.level_projector(x, radius / t)

    polar_factory = None
    if g.polar_factory is not None:
        base_polar = g.polar_factory

        def polar_factory() -> Gauge:
            return scale_gauge(base_polar(), 1 / t)

    prox_operator = None
    if g.prox_operator is not None:
        base_prox = g.prox_operator

        def prox_operator(s: float, x: Vector) -> Vector:
            return base_prox(s * t, x)

    return Gauge(
        kind="scaled",
        dim=g.dim,
        evaluate_many=evaluate_many,
        level_projector=level_projector,
        domain_projector=g.domain_projector,
        polar_factory=polar_factory,
        prox_operator=prox_operator,
        is_continuous=g.is_continuous,
        params={"base": g, "factor": t},
    )


def gauge_from_descriptor(
    descriptor: GaugeDescriptor,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Gauge:
    """
    Builds a catalog gauge from its declarative description.

    Args:
        descriptor (GaugeDescriptor): Validated descriptor.
        tolerances (Tolerances): Tolerances for cone and origin membership.

    Returns:
        Gauge: The described gauge.

    Raises:
        ValueError: If required params are missing or malformed.
    """
    params = descriptor.params
    kind, dim = descriptor.kind, descriptor.dim
    _reject_unknown(params, _ALLOWED_PARAMS[kind], kind)

    match kind:
        case "l1" | "l2" | "linf":
            gauge = make_norm_gauge(kind, dim)
            scale = params.get("scale", 1.0)
            if not isinstance(scale, float):
                raise ValueError("param 'scale' must be a number")
            return gauge if scale == 1.0 else scale_gauge(gauge, scale)
        case "linear_cone":
            if "c" not in params:
                raise ValueError("linear_cone requires param 'c'")
            return make_linear_cone_gauge(
                as_vector(params["c"], dim),
                _cone_from_params(params, dim),
                tolerances=tolerances,
            )
        case "cone_indicator":
            return make_cone_indicator(
                _cone_from_params(params, dim),
                tolerances=tolerances,
            )
        case _:
            return make_zero_indicator(dim, tolerances=tolerances)


_ALLOWED_PARAMS: dict[str, frozenset[str]] = {
    "l1": frozenset({"scale"}),
    "l2": frozenset({"scale"}),
    "linf": frozenset({"scale"}),
    "linear_cone": frozenset({"c", "cone", "normal"}),
    "cone_indicator": frozenset({"cone", "normal"}),
    "zero_indicator": frozenset(),
}


def _reject_unknown(
    params: dict[str, object],
    allowed: frozenset[str],
    kind: str,
) -> None:
    unknown = set(params) - allowed
    if unknown:
        raise ValueError(f"unknown param(s) for {kind}: {', '.join(sorted(unknown))}")


def _cone_from_params(params: dict[str, object], dim: int) -> ConeSpec:
    match params.get("cone", "orthant"):
        case "orthant":
            return orthant_cone(dim)
        case "halfspace":
            if "normal" not in params:
                raise ValueError("halfspace cones require param 'normal'")
            return halfspace_cone(as_vector(params["normal"], dim))
        case other:
            raise ValueError(f"unknown cone: {other!r}")
