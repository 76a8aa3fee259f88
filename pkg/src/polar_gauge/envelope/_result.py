# envelope/_result.py

from typing import NamedTuple

from polar_gauge._utils import Vector
from polar_gauge.schemas import ProxCase


class PolarProxResult(NamedTuple):
    """
    Polar envelope value and polar proximal point at one input.

    Attributes:
        value: kappa_alpha(x), nonnegative.
        prox_point: The unique polar proximal point.
        case: Which branch of the map produced the point.
        root_residual: |alpha^2 r^2 - |x - P(x)|^2| at the returned radius, zero
            for the other branches.
        root_iterations: Bisection iterations spent on the root.
    """

    value: float
    prox_point: Vector
    case: ProxCase
    root_residual: float = 0.0
    root_iterations: int = 0


class EnvelopeGradient(NamedTuple):
    """
    Gradient of the polar envelope together with the inner product that makes it
    well defined.

    Attributes:
        gradient: The gradient at x.
        inner_product_check: <x, x - prox_point>, positive whenever produced.
        value: The envelope value at x.
    """

    gradient: Vector
    inner_product_check: float
    value: float
