# envelope/gradient.py

import numpy as np
from numpy.typing import ArrayLike

from polar_gauge._utils import as_vector, require_positive
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.errors import NondifferentiableError
from polar_gauge.gauges import Gauge

from ._result import EnvelopeGradient
from .polar_prox import polar_prox


def polar_envelope_gradient(
    g: Gauge,
    alpha: float,
    x: ArrayLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> EnvelopeGradient:
    """
    Gradient of the polar envelope where it is positive:

        grad kappa_alpha(x) = |x - xbar| / (alpha <x, x - xbar>) * (x - xbar)

    with xbar the polar proximal point. The gradient satisfies
    <x, grad> = kappa_alpha(x).

    Args:
        g (Gauge): A closed gauge.
        alpha (float): Envelope parameter, positive.
        x (ArrayLike): Input point.
        tolerances (Tolerances): Supplies `grad_floor_rel`.

    Returns:
        EnvelopeGradient: Gradient, the inner product <x, x - xbar> and the value.

    Raises:
        NondifferentiableError: If the envelope is at most
            `grad_floor_rel * (1 + |x| / alpha)`, or the inner product is not
            positive.
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(x, g.dim)
    result = polar_prox(g, weight, point, tolerances=tolerances)

    floor = tolerances.grad_floor_rel * (1 + float(np.linalg.norm(point)) / weight)
    if result.value <= floor:
        raise NondifferentiableError(
            f"polar envelope {result.value:.3e} is below the floor {floor:.3e}",
            value=result.value,
        )

    difference = point - result.prox_point
    inner = float(point @ difference)
    if inner <= 0:
        raise NondifferentiableError(
            f"<x, x - prox> = {inner:.3e} is not positive",
            value=result.value,
        )

    scale = float(np.linalg.norm(difference)) / (weight * inner)
    return EnvelopeGradient(scale * difference, inner, result.value)


def envelope_polar(g: Gauge, alpha: float, y: ArrayLike) -> float:
    """
    Polar of the polar envelope, (kappa_alpha)°(y) = kappa°(y) + alpha |y|.

    Args:
        g (Gauge): Gauge with a closed-form polar.
        alpha (float): Envelope parameter, positive.
        y (ArrayLike): Input point.

    Returns:
        float: The polar value.

    Raises:
        CapabilityError: If the gauge has no closed-form polar.
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(y, g.dim)
    return g.polar().evaluate(point) + weight * float(np.linalg.norm(point))
