# convolution/max_convolve.py

import logging
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from polar_gauge._utils import Vector, as_vector
from polar_gauge.errors import CapabilityError
from polar_gauge.gauges import Gauge
from polar_gauge.oracle import grid_minimize
from polar_gauge.schemas import GridSpec
from polar_gauge.schemas.grid import DEFAULT_POINTS, DEFAULT_ROUNDS, DEFAULT_SHRINK

logger = logging.getLogger(__name__)


class ConvolutionWitness(NamedTuple):
    """
    Value of a max convolution at a point and the split attaining it.

    Attributes:
        value: (g1 ◇ g2)(x), estimated from above on the grid.
        splitter: z with value = max{g1(z), g2(x - z)}.
        attained: Whether a finite split was found.
    """

    value: float
    splitter: Vector
    attained: bool


def convolution_grid(
    x: ArrayLike,
    *,
    points: int = DEFAULT_POINTS,
    rounds: int = DEFAULT_ROUNDS,
    shrink: float = DEFAULT_SHRINK,
) -> GridSpec:
    """
    Default search box for splitting x: centred at x / 2 with half-width |x|.

    Args:
        x (ArrayLike): Nonzero point being split.
        points (int): Grid points per dimension.
        rounds (int): Refinement sweeps.
        shrink (float): Half-width multiplier per sweep.

    Returns:
        GridSpec: The search grid.
    """
    point = as_vector(x)
    return GridSpec.around(
        point / 2,
        float(np.linalg.norm(point)),
        points=points,
        rounds=rounds,
        shrink=shrink,
    )


def max_convolve(
    g1: Gauge,
    g2: Gauge,
    x: ArrayLike,
    grid: GridSpec | None = None,
) -> ConvolutionWitness:
    """
    Evaluates the max convolution (g1 ◇ g2)(x) = inf_z max{g1(z), g2(x - z)} by
    refined grid search over z.

    Args:
        g1 (Gauge): First gauge.
        g2 (Gauge): Second gauge, same dimension.
        x (ArrayLike): Point to split.
        grid (GridSpec | None): Search grid over z; defaults to
            `convolution_grid(x)`.

    Returns:
        ConvolutionWitness: Value, best split and whether it is finite.

    Raises:
        ValueError: If the gauges have different dimensions.
        CapabilityError: If the dimension exceeds three.
    """
    if g1.dim != g2.dim:
        raise ValueError(f"gauge dimensions differ: {g1.dim} and {g2.dim}")
    point = as_vector(x, g1.dim)

    if not np.any(point):
        return ConvolutionWitness(0.0, np.zeros_like(point), attained=True)

    search = grid if grid is not None else convolution_grid(point)

    def split_value(splits: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.maximum(g1.evaluate_many(splits), g2.evaluate_many(point - splits))

    result = grid_minimize(split_value, search, vectorized=True)
    return ConvolutionWitness(
        result.value,
        result.point,
        attained=bool(np.isfinite(result.value)),
    )


def unit_directions(dim: int, count: int) -> NDArray[np.float64]:
    """
    Deterministic, nearly uniform unit directions.

    Two-dimensional directions are evenly spaced angles starting at 0; three
    dimensional ones follow a Fibonacci lattice on the sphere.

    Args:
        dim (int): 2 or 3.
        count (int): Number of directions.

    Returns:
        NDArray[np.float64]: Array of shape (count, dim).

    Raises:
        CapabilityError: For any other dimension.
    """
    if dim == 2:
        angles = np.linspace(0.0, 2 * np.pi, count, endpoint=False)
        return np.column_stack([np.cos(angles), np.sin(angles)])
    if dim == 3:
        index = np.arange(count) + 0.5
        height = 1 - 2 * index / count
        radius = np.sqrt(1 - height**2)
        azimuth = np.pi * (1 + np.sqrt(5)) * index
        return np.column_stack(
            [radius * np.cos(azimuth), radius * np.sin(azimuth), height],
        )
    raise CapabilityError(f"direction sampling supports 2 or 3 dimensions, got {dim}")


def sample_unit_level_set(
    g: Gauge,
    directions: NDArray[np.float64],
) -> NDArray[np.float64]:
    """
    Boundary points u / g(u) of the unit level set [g <= 1] along directions.

    Directions in which g vanishes (unbounded level set) or is infinite (outside
    the domain) are dropped.

    Args:
        g (Gauge): The gauge.
        directions (NDArray[np.float64]): Unit directions of shape (k, dim).

    Returns:
        NDArray[np.float64]: Boundary points, at most k rows.
    """
    values = g.evaluate_many(directions)
    keep = np.isfinite(values) & (values > 0)
    return directions[keep] / values[keep, np.newaxis]


def sample_convolution_level_set(
    g1: Gauge,
    g2: Gauge,
    directions: NDArray[np.float64],
    *,
    points: int = DEFAULT_POINTS,
    rounds: int = DEFAULT_ROUNDS,
    shrink: float = DEFAULT_SHRINK,
) -> NDArray[np.float64]:
    """
    Boundary points of the unit level set of g1 ◇ g2, one per direction, from
    grid-estimated convolution values.

    The grid overestimates the convolution, so every returned point lies inside
    the true unit level set.

    Args:
        g1 (Gauge): First gauge.
        g2 (Gauge): Second gauge.
        directions (NDArray[np.float64]): Unit directions of shape (k, dim).
        points (int): Grid points per dimension for each split search.
        rounds (int): Refinement sweeps for each split search.
        shrink (float): Half-width multiplier per sweep.

    Returns:
        NDArray[np.float64]: Boundary points, at most k rows.
    """
    values = np.empty(len(directions))
    for index, direction in enumerate(directions):
        grid = convolution_grid(direction, points=points, rounds=rounds, shrink=shrink)
        values[index] = max_convolve(g1, g2, direction, grid).value

    keep = np.isfinite(values) & (values > 0)
    logger.debug("Sampled %d of %d boundary points", keep.sum(), len(values))
    return directions[keep] / values[keep, np.newaxis]
