# gauges/prox.py

import numpy as np
from numpy.typing import ArrayLike

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.errors import CapabilityError

from .base import Gauge


def moreau_prox(g: Gauge, t: float, x: ArrayLike) -> Vector:
    """
    Computes the Moreau proximal point argmin_z { g(z) + |x - z|^2 / (2t) }.

    Args:
        g (Gauge): Gauge with a closed-form prox.
        t (float): Prox parameter, positive.
        x (ArrayLike): Point of length `g.dim`.

    Returns:
        Vector: prox_{t g}(x).

    Raises:
        ValueError: If t is not positive or x is malformed.
        CapabilityError: If the gauge has no closed-form prox.
    """
    step = require_positive(t, "t")
    point = as_vector(x, g.dim)
    if g.prox_operator is None:
        raise CapabilityError(f"gauge '{g.kind}' has no closed-form Moreau prox")
    return g.prox_operator(step, point)


def moreau_envelope(g: Gauge, t: float, x: ArrayLike) -> float:
    """
    Evaluates the Moreau envelope min_z { g(z) + |x - z|^2 / (2t) }.

    Args:
        g (Gauge): Gauge with a closed-form prox.
        t (float): Envelope parameter, positive.
        x (ArrayLike): Point of length `g.dim`.

    Returns:
        float: The envelope value.
    """
    point = as_vector(x, g.dim)
    u = moreau_prox(g, t, point)
    return g.evaluate(u) + float(np.sum((point - u) ** 2)) / (2 * t)
