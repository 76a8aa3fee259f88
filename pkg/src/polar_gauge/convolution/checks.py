# convolution/checks.py

import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from polar_gauge._utils import as_vector, require_positive
from polar_gauge.errors import CapabilityError
from polar_gauge.gauges import Gauge
from polar_gauge.schemas import (
    LevelSumReport,
    MinkowskiReport,
    PolarIdentityReport,
    SampleDeviation,
)
from polar_gauge.schemas.grid import DEFAULT_POINTS, DEFAULT_ROUNDS

from .max_convolve import (
    convolution_grid,
    max_convolve,
    sample_convolution_level_set,
    sample_unit_level_set,
    unit_directions,
)

logger = logging.getLogger(__name__)

DEFAULT_DIRECTIONS = 720


def check_polar_identity(
    g1: Gauge,
    g2: Gauge,
    samples: Sequence[ArrayLike],
    *,
    directions: int = DEFAULT_DIRECTIONS,
    points: int = DEFAULT_POINTS,
    rounds: int = DEFAULT_ROUNDS,
) -> PolarIdentityReport:
    """
    Compares the polar of g1 ◇ g2, sampled as the support function of its unit
    level set, with the closed-form sum g1°(y) + g2°(y) at each sample y.

    The pass threshold on the relative deviation is twice the resolution of
    the split-search grid.

    Args:
        g1 (Gauge): First gauge, with closed-form polar.
        g2 (Gauge): Second gauge, with closed-form polar.
        samples (Sequence[ArrayLike]): Points y at which to compare.
        directions (int): Number of level-set boundary directions.
        points (int): Grid points per dimension for each split search.
        rounds (int): Refinement sweeps for each split search.

    Returns:
        PolarIdentityReport: Per-sample deviations and the verdict.
    """
    polar1, polar2 = g1.polar(), g2.polar()
    boundary = sample_convolution_level_set(
        g1,
        g2,
        unit_directions(g1.dim, directions),
        points=points,
        rounds=rounds,
    )
    threshold = 2 * _unit_resolution(g1.dim, points, rounds)

    rows = []
    for sample in samples:
        y = as_vector(sample, g1.dim)
        observed = max(float(np.max(boundary @ y)), 0.0)
        expected = polar1.evaluate(y) + polar2.evaluate(y)
        deviation = abs(observed - expected) / expected if expected > 0 else observed
        rows.append(
            SampleDeviation(
                sample=y,
                observed=observed,
                expected=expected,
                deviation=deviation,
            ),
        )

    max_deviation = max((row.deviation for row in rows), default=0.0)
    logger.info(
        "Polar identity: max relative deviation %.3e (threshold %.3e)",
        max_deviation,
        threshold,
    )
    return PolarIdentityReport(
        samples=tuple(rows),
        max_deviation=max_deviation,
        threshold=threshold,
        passed=max_deviation <= threshold,
    )


def check_level_sum(
    g1: Gauge,
    g2: Gauge,
    lam: float,
    samples: Sequence[ArrayLike],
    *,
    sums: int = 200,
    seed: int = 42,
) -> LevelSumReport:
    """
    Samples both inclusions of [(g1 ◇ g2) < lam] = [g1 < lam] + [g2 < lam] in two
    dimensions.

    - Random sums p1 + p2 of strict level-set members must have convolution
      value below lam + margin.
    - Every sample x with convolution value below lam - margin must split, via
      the grid witness, into strict level-set members.

    The margin is twice the resolution of the split-search grid; samples inside
    the margin band are skipped.

    Args:
        g1 (Gauge): First gauge.
        g2 (Gauge): Second gauge.
        lam (float): Level, positive.
        samples (Sequence[ArrayLike]): Points tested for decomposition.
        sums (int): Number of random sums tested.
        seed (int): Seed for the random sums.

    Returns:
        LevelSumReport: Counts and failures.

    Raises:
        CapabilityError: If the gauges are not two-dimensional.
    """
    level = require_positive(lam, "lam")
    if g1.dim != 2 or g2.dim != 2:
        raise CapabilityError("level-sum checks are two-dimensional")

    failures: list[str] = []

    rng = np.random.default_rng(seed)
    firsts = _strict_members(g1, level, sums, rng)
    seconds = _strict_members(g2, level, sums, rng)
    for p1, p2 in zip(firsts, seconds, strict=True):
        total = p1 + p2
        witness = max_convolve(g1, g2, total)
        margin = _margin(total)
        if witness.value >= level + margin:
            failures.append(f"sum {total.tolist()} has value {witness.value:.6g}")

    checked = 0
    for sample in samples:
        x = as_vector(sample, 2)
        witness = max_convolve(g1, g2, x)
        if witness.value >= level - _margin(x):
            continue
        checked += 1
        z = witness.splitter
        if not (g1.evaluate(z) < level and g2.evaluate(x - z) < level):
            failures.append(f"point {x.tolist()} does not split below {level}")

    return LevelSumReport(
        checked_sums=len(firsts),
        checked_points=checked,
        failures=tuple(failures),
        passed=not failures,
    )


def check_minkowski_sum(
    g1: Gauge,
    g2: Gauge,
    *,
    directions: int = DEFAULT_DIRECTIONS,
    points: int = DEFAULT_POINTS,
    rounds: int = DEFAULT_ROUNDS,
) -> MinkowskiReport:
    """
    Compares the unit level set of g1 ◇ g2 with the Minkowski sum D1 + D2 of the
    unit level sets of g1 and g2, via the Hausdorff distance
    sup_u |h_A(u) - h_B(u)| of their sampled support functions.

    Sampling only underestimates support functions. The threshold allows twice
    the split-grid resolution at the largest sampled radius, plus the boundary
    length a missed vertex can hide between two adjacent directions, which is
    at most spacing * R^2 / rho for a convex set lying between the radii rho
    and R; the sum side carries this term once per ball.

    Args:
        g1 (Gauge): First gauge.
        g2 (Gauge): Second gauge.
        directions (int): Number of boundary and support directions.
        points (int): Grid points per dimension for each split search.
        rounds (int): Refinement sweeps for each split search.

    Returns:
        MinkowskiReport: Distance, threshold and verdict.
    """
    units = unit_directions(g1.dim, directions)
    convolution = sample_convolution_level_set(
        g1,
        g2,
        units,
        points=points,
        rounds=rounds,
    )
    ball1 = sample_unit_level_set(g1, units)
    ball2 = sample_unit_level_set(g2, units)

    support_sum = _support(ball1, units) + _support(ball2, units)
    support_convolution = _support(convolution, units)
    hausdorff = float(np.max(np.abs(support_sum - support_convolution)))

    outer = float(np.linalg.norm(convolution, axis=1).max())
    spread = max(_spread(convolution), _spread(ball1) + _spread(ball2))
    threshold = (
        2 * outer * _unit_resolution(g1.dim, points, rounds)
        + _direction_spacing(g1.dim, directions) * spread
    )

    logger.info("Minkowski sum: Hausdorff %.3e (threshold %.3e)", hausdorff, threshold)
    return MinkowskiReport(
        hausdorff=hausdorff,
        threshold=threshold,
        passed=hausdorff <= threshold,
    )


def _support(
    points: NDArray[np.float64],
    units: NDArray[np.float64],
) -> NDArray[np.float64]:
    return (units @ points.T).max(axis=1)


def _strict_members(
    g: Gauge,
    level: float,
    count: int,
    rng: np.random.Generator,
) -> NDArray[np.float64]:
    """
    Random points of the strict level set [g < level], drawn along random
    directions at a random fraction of the boundary radius.
    """
    units = unit_directions(2, count)[rng.permutation(count)]
    boundary = sample_unit_level_set(g, units) * level
    fractions = rng.uniform(0.0, 0.98, size=len(boundary))
    return boundary * fractions[:, np.newaxis]


def _margin(x: NDArray[np.float64]) -> float:
    if not np.any(x):
        return 0.0
    return 2 * convolution_grid(x).resolution


def _spread(points: NDArray[np.float64]) -> float:
    radii = np.linalg.norm(points, axis=1)
    return float(radii.max() ** 2 / radii.min())


def _direction_spacing(dim: int, count: int) -> float:
    # angular gap between neighbouring directions of unit_directions
    if dim == 2:
        return 2 * np.pi / count
    return float(np.sqrt(4 * np.pi / count))


def _unit_resolution(dim: int, points: int, rounds: int) -> float:
    return convolution_grid(np.eye(dim)[0], points=points, rounds=rounds).resolution
