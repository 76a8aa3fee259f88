# envelope/fast_paths.py

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.gauges import Gauge
from polar_gauge.schemas import ProxCase

from ._result import PolarProxResult

type FastPath = Callable[[Gauge, float, Vector, Tolerances], PolarProxResult]


def linf_polar_prox_fast(alpha: float, x: ArrayLike) -> PolarProxResult:
    """
    Polar proximal map of the infinity norm in O(n log n).

    With a = |x| sorted in descending order, the root r of
    alpha^2 r^2 = sum_i (a_i - r)_+^2 is the smaller root of the quadratic
    obtained when exactly the first k entries exceed r, for the unique k with
    a_{k+1} <= r <= a_k. The prox point clips x to [-r, r].

    Args:
        alpha (float): Envelope parameter, positive.
        x (ArrayLike): Input point.

    Returns:
        PolarProxResult: Envelope value and clipped point.
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(x)
    if not np.any(point):
        return _zero(point)

    a = np.sort(np.abs(point))[::-1]
    s1, s2 = np.cumsum(a), np.cumsum(a * a)
    k = np.arange(1, a.size + 1)

    with np.errstate(invalid="ignore", divide="ignore"):
        disc = s1 * s1 - (k - weight**2) * s2
        roots = s2 / (s1 + np.sqrt(disc))

    below = np.append(a[1:], 0.0)
    violation = np.maximum.reduce([below - roots, roots - a, np.zeros_like(a)])
    violation = np.where(np.isnan(violation), np.inf, violation)
    radius = float(roots[int(np.argmin(violation))])

    excess = float(np.sum(np.maximum(a - radius, 0) ** 2))
    residual = abs(weight**2 * radius**2 - excess)
    return PolarProxResult(
        radius,
        np.clip(point, -radius, radius),
        ProxCase.LEVEL_SET_ROOT,
        residual,
    )


def l2_polar_prox_fast(alpha: float, x: ArrayLike) -> PolarProxResult:
    """
    Polar proximal map of the Euclidean norm: value |x| / (1 + alpha) and prox
    point x / (1 + alpha).
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(x)
    if not np.any(point):
        return _zero(point)

    norm = float(np.linalg.norm(point))
    radius = norm / (1 + weight)
    residual = abs(weight**2 * radius**2 - (norm - radius) ** 2)
    return PolarProxResult(
        radius,
        point / (1 + weight),
        ProxCase.LEVEL_SET_ROOT,
        residual,
    )


def cone_polar_prox_fast(
    g: Gauge,
    alpha: float,
    x: ArrayLike,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> PolarProxResult:
    """
    Polar proximal map of a cone indicator: the cone projection, with envelope
    value dist_K(x) / alpha.

    Args:
        g (Gauge): A gauge of kind "cone_indicator".
        alpha (float): Envelope parameter, positive.
        x (ArrayLike): Input point.
        tolerances (Tolerances): Cone membership tolerance.

    Returns:
        PolarProxResult: Domain-projection result, or the zero envelope inside K.
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(x, g.dim)
    projected = g.project_domain(point)
    distance = float(np.linalg.norm(point - projected))

    if distance <= tolerances.feas_rel * (1 + float(np.linalg.norm(point))):
        return _zero(point)
    return PolarProxResult(distance / weight, projected, ProxCase.DOMAIN_PROJECTION)


FAST_PATHS: dict[str, FastPath] = {
    "linf": lambda _, alpha, x, __: linf_polar_prox_fast(alpha, x),
    "l2": lambda _, alpha, x, __: l2_polar_prox_fast(alpha, x),
    "cone_indicator": cone_polar_prox_fast,
}


def _zero(point: Vector) -> PolarProxResult:
    return PolarProxResult(0.0, point.copy(), ProxCase.ZERO_ENVELOPE)
