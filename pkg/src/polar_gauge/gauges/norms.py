# gauges/norms.py

import logging
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from polar_gauge._utils import Vector, as_vector

from .base import Gauge

logger = logging.getLogger(__name__)

type NormKind = Literal["l1", "l2", "linf"]

_DUAL_KIND: dict[str, NormKind] = {"l1": "linf", "l2": "l2", "linf": "l1"}


def make_norm_gauge(kind: NormKind, dim: int) -> Gauge:
    """
    Builds one of the catalog norms with closed-form level-set projection, Moreau
    prox and dual-norm polar.

    Args:
        kind (NormKind): "l1", "l2" or "linf".
        dim (int): Ambient dimension, at least 1.

    Returns:
        Gauge: The norm.

    Raises:
        ValueError: If the kind is unknown or the dimension is below 1.
    """
    builders = {
        "l1": (_l1_many, _l1_level, _soft_threshold),
        "l2": (_l2_many, _l2_level, _l2_shrink),
        "linf": (_linf_many, _linf_level, _linf_prox),
    }
    if kind not in builders:
        raise ValueError(f"unknown norm kind: {kind!r}")

    evaluate_many, level_projector, prox_operator = builders[kind]
    dual = _DUAL_KIND[kind]

    return Gauge(
        kind=kind,
        dim=dim,
        evaluate_many=evaluate_many,
        level_projector=level_projector,
        polar_factory=lambda: make_norm_gauge(dual, dim),
        prox_operator=prox_operator,
    )


def project_weighted_l1_ball(
    v: ArrayLike,
    weights: ArrayLike,
    radius: float,
) -> Vector:
    """
    Projects v onto the weighted l1 ball {u : sum_i w_i |u_i| <= radius}.

    Sorts |v_i| / w_i in descending order and picks the largest active prefix
    whose soft-threshold level keeps every active entry positive; the projection
    is then sign(v_i) * max(|v_i| - theta * w_i, 0).

    Args:
        v (ArrayLike): Point to project.
        weights (ArrayLike): Positive weights, same length as v.
        radius (float): Ball radius, nonnegative.

    Returns:
        Vector: The projection.

    Raises:
        ValueError: If shapes differ, a weight is not positive or the radius is
            negative.
    """
    point = as_vector(v)
    w = as_vector(weights, point.size)
    if np.any(w <= 0):
        raise ValueError("weights must be strictly positive")
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")

    magnitude = np.abs(point)
    if float(w @ magnitude) <= radius:
        return point
    if radius == 0:
        return np.zeros_like(point)

    order = np.argsort(magnitude / w)[::-1]
    a, d = magnitude[order], w[order]

    # theta_k is the threshold when the first k entries are active
    thetas = (np.cumsum(d * a) - radius) / np.cumsum(d * d)
    active = np.nonzero(a / d > thetas)[0]
    theta = float(thetas[active[-1]])

    return np.sign(point) * np.maximum(magnitude - theta * w, 0.0)


def project_l1_ball(v: Vector, radius: float) -> Vector:
    """
    Projects v onto the l1 ball of the given radius.
    """
    return project_weighted_l1_ball(v, np.ones_like(v), radius)


def _l1_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.abs(points).sum(axis=1)


def _l2_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.linalg.norm(points, axis=1)


def _linf_many(points: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.abs(points).max(axis=1)


def _l1_level(x: Vector, radius: float) -> Vector:
    return project_l1_ball(x, radius)


def _l2_level(x: Vector, radius: float) -> Vector:
    norm = float(np.linalg.norm(x))
    if norm <= radius:
        return x.copy()
    return x * (radius / norm)


def _linf_level(x: Vector, radius: float) -> Vector:
    return np.clip(x, -radius, radius)


def _soft_threshold(t: float, x: Vector) -> Vector:
    return np.sign(x) * np.maximum(np.abs(x) - t, 0.0)


def _l2_shrink(t: float, x: Vector) -> Vector:
    norm = float(np.linalg.norm(x))
    if norm <= t:
        return np.zeros_like(x)
    return (1 - t / norm) * x


def _linf_prox(t: float, x: Vector) -> Vector:
    # Moreau decomposition with the dual l1 ball
    return x - project_l1_ball(x, t)
