# oracle/grid.py

import logging
from collections.abc import Callable, Sequence
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from polar_gauge._utils import Vector, as_vector
from polar_gauge.errors import CapabilityError, NoFeasiblePointError
from polar_gauge.schemas import GridSpec

logger = logging.getLogger(__name__)

MAX_GRID_DIM = 3

type Objective = Callable[[NDArray[np.float64]], float | NDArray[np.float64]]
type Membership = Callable[[NDArray[np.float64]], bool | NDArray[np.bool_]]


class GridResult(NamedTuple):
    """
    Outcome of a refined grid search.

    Attributes:
        point: Best grid point found.
        value: Objective (or distance, for projections) at that point.
        history: Incumbent value after the initial sweep and each refinement.
    """

    point: Vector
    value: float
    history: tuple[float, ...]


def grid_minimize(
    objective: Objective,
    grid: GridSpec,
    *,
    vectorized: bool = False,
) -> GridResult:
    """
    Minimises an objective over a box grid with local refinement.

    The incumbent is replaced only on strict improvement, so the first grid point
    wins ties and the incumbent value never increases across rounds. For
    continuous objectives the returned point lies within one final-grid cell of a
    minimiser over the box.

    Args:
        objective (Objective): Maps a point to a scalar or, when `vectorized`, a
            (k, d) batch of points to k scalars. NaN values count as +inf.
        grid (GridSpec): Box and refinement settings.
        vectorized (bool): Whether the objective accepts batches.

    Returns:
        GridResult: Best point, its value and the per-round history.

    Raises:
        CapabilityError: If the grid has more than three dimensions.
    """
    _require_small(grid.dim)

    lower = np.asarray(grid.lower)
    upper = np.asarray(grid.upper)
    points = _mesh(lower, upper, grid.points)
    values = _evaluate(objective, points, vectorized=vectorized)

    best_index = int(np.argmin(values))
    best, best_value = points[best_index], float(values[best_index])
    history = [best_value]

    half = (upper - lower) / 2
    for _ in range(grid.rounds):
        half = half * grid.shrink
        points = _mesh(best - half, best + half, grid.points)
        values = _evaluate(objective, points, vectorized=vectorized)
        index = int(np.argmin(values))
        if values[index] < best_value:
            best, best_value = points[index], float(values[index])
        history.append(best_value)

    return GridResult(best.copy(), best_value, tuple(history))


def grid_project(
    membership: Membership,
    x: Vector,
    grid: GridSpec,
    *,
    vectorized: bool = False,
    anchors: Sequence[Vector] = (),
) -> Vector:
    """
    Approximates the Euclidean projection of x onto a set known only through a
    membership test.

    Each sweep keeps the member grid point nearest to x; refinement recentres the
    box at the incumbent. Known members passed as `anchors` seed the search so
    that a set thinner than the first grid still yields a point.

    Args:
        membership (Membership): Set membership test, batched when `vectorized`.
        x (Vector): Point to project.
        grid (GridSpec): Box and refinement settings.
        vectorized (bool): Whether the membership test accepts batches.
        anchors (Sequence[Vector]): Points known to belong to the set.

    Returns:
        Vector: The nearest member found.

    Raises:
        CapabilityError: If the grid has more than three dimensions.
        NoFeasiblePointError: If no grid point or anchor belongs to the set.
    """
    _require_small(grid.dim)
    target = as_vector(x, grid.dim)

    best, best_distance = None, np.inf
    for anchor in anchors:
        distance = float(np.linalg.norm(anchor - target))
        if distance < best_distance:
            best, best_distance = np.asarray(anchor, dtype=np.float64), distance

    lower = np.asarray(grid.lower)
    upper = np.asarray(grid.upper)
    half = (upper - lower) / 2
    center = (lower + upper) / 2

    for sweep in range(grid.rounds + 1):
        if sweep:
            half = half * grid.shrink
            center = best
        candidate, distance = _nearest_member(
            membership,
            target,
            _mesh(center - half, center + half, grid.points),
            vectorized=vectorized,
        )
        if distance < best_distance:
            best, best_distance = candidate, distance
        if best is None:
            raise NoFeasiblePointError("no grid point satisfies the membership test")

    return best.copy()


def _nearest_member(
    membership: Membership,
    target: Vector,
    points: NDArray[np.float64],
    *,
    vectorized: bool,
) -> tuple[Vector | None, float]:
    """
    Returns the member grid point closest to the target, or (None, inf).
    """
    if vectorized:
        mask = np.asarray(membership(points), dtype=bool)
    else:
        mask = np.fromiter((bool(membership(p)) for p in points), bool, len(points))

    members = points[mask]
    if members.size == 0:
        return None, np.inf

    distances = np.linalg.norm(members - target, axis=1)
    index = int(np.argmin(distances))
    return members[index], float(distances[index])


def _mesh(
    lower: NDArray[np.float64],
    upper: NDArray[np.float64],
    points: int,
) -> NDArray[np.float64]:
    """
    Returns the (points**d, d) array of grid points in C order.
    """
    axes = [np.linspace(lo, hi, points) for lo, hi in zip(lower, upper, strict=True)]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack(mesh, axis=-1).reshape(-1, len(axes))


def _evaluate(
    objective: Objective,
    points: NDArray[np.float64],
    *,
    vectorized: bool,
) -> NDArray[np.float64]:
    if vectorized:
        values = np.asarray(objective(points), dtype=np.float64).reshape(len(points))
    else:
        values = np.fromiter((objective(p) for p in points), np.float64, len(points))
    return np.where(np.isnan(values), np.inf, values)


def _require_small(dim: int) -> None:
    if dim > MAX_GRID_DIM:
        raise CapabilityError(
            f"grid oracles support at most {MAX_GRID_DIM} dimensions, got {dim}",
        )
