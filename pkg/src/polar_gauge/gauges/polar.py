# gauges/polar.py

import numpy as np
from numpy.typing import ArrayLike, NDArray

from polar_gauge._utils import as_vector
from polar_gauge.oracle import grid_minimize
from polar_gauge.schemas import GridSpec

from .base import Gauge


def polar_eval_oracle(g: Gauge, y: ArrayLike, grid: GridSpec) -> float:
    """
    Brute-force lower bound on the polar gauge, sup { <u, y> : kappa(u) <= 1 },
    searched over a grid that should cover the unit level set.

    Only grid points inside the unit level set are scored, so the value never
    exceeds the true polar and converges to it as the grid is refined.

    Args:
        g (Gauge): The gauge.
        y (ArrayLike): Point of length `g.dim`.
        grid (GridSpec): Search grid, at most three-dimensional.

    Returns:
        float: Lower estimate of kappa°(y).

    Raises:
        CapabilityError: If the grid has more than three dimensions.
    """
    direction = as_vector(y, g.dim)

    def negated_support(points: NDArray[np.float64]) -> NDArray[np.float64]:
        inside = g.evaluate_many(points) <= 1.0
        return np.where(inside, -(points @ direction), np.inf)

    result = grid_minimize(negated_support, grid, vectorized=True)
    return max(-result.value, 0.0)
