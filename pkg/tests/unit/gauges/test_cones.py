# gauges/test_cones.py

import numpy as np
import pytest

from polar_gauge.errors import ConvergenceError
from polar_gauge.gauges import (
    dykstra_project,
    halfspace_cone,
    make_cone_indicator,
    make_linear_cone_gauge,
    orthant_cone,
)

pytestmark = pytest.mark.unit


def test_orthant_projection() -> None:
    """
    ARRANGE: nonnegative orthant in R^2
    ACT:     project (-1, 2)
    ASSERT:  returns (0, 2)
    """
    actual = orthant_cone(2).project(np.array([-1.0, 2.0]))

    assert np.array_equal(actual, [0.0, 2.0])


def test_orthant_polar_projection() -> None:
    """
    ARRANGE: nonnegative orthant in R^2
    ACT:     project (-1, 2) onto the polar cone
    ASSERT:  returns (-1, 0)
    """
    actual = orthant_cone(2).project_polar(np.array([-1.0, 2.0]))

    assert np.array_equal(actual, [-1.0, 0.0])


def test_halfspace_projection() -> None:
    """
    ARRANGE: halfspace x1 <= 0
    ACT:     project (2, 3)
    ASSERT:  returns (0, 3)
    """
    actual = halfspace_cone([1.0, 0.0]).project(np.array([2.0, 3.0]))

    assert np.allclose(actual, [0.0, 3.0])


def test_halfspace_projection_is_row_wise() -> None:
    """
    ARRANGE: halfspace x1 <= 0 and a batch of two points
    ACT:     project the batch
    ASSERT:  each row is projected independently
    """
    batch = np.array([[2.0, 3.0], [-1.0, 1.0]])

    actual = halfspace_cone([1.0, 0.0]).project(batch)

    assert np.allclose(actual, [[0.0, 3.0], [-1.0, 1.0]])


def test_halfspace_rejects_zero_normal() -> None:
    """
    ARRANGE: zero normal
    ACT:     halfspace_cone
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        halfspace_cone([0.0, 0.0])


def test_contains_many() -> None:
    """
    ARRANGE: orthant and one inside, one outside point
    ACT:     contains_many
    ASSERT:  mask is (True, False)
    """
    actual = orthant_cone(2).contains_many(np.array([[1.0, 0.0], [-1.0, 0.0]]))

    assert actual.tolist() == [True, False]


def test_dykstra_projects_onto_intersection() -> None:
    """
    ARRANGE: orthant and the halfspace x1 <= x2
    ACT:     dykstra_project (2, -1)
    ASSERT:  returns (0.5, 0.5)
    """
    sets = [orthant_cone(2).project, halfspace_cone([1.0, -1.0]).project]

    actual = dykstra_project([2.0, -1.0], sets)

    assert np.allclose(actual, [0.5, 0.5], atol=1e-9)


def test_dykstra_single_set_is_plain_projection() -> None:
    """
    ARRANGE: a single orthant projector
    ACT:     dykstra_project (-3, 1)
    ASSERT:  returns the orthant projection
    """
    actual = dykstra_project([-3.0, 1.0], [orthant_cone(2).project])

    assert np.array_equal(actual, [0.0, 1.0])


def test_dykstra_requires_a_projector() -> None:
    """
    ARRANGE: empty projector list
    ACT:     dykstra_project
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        dykstra_project([1.0, 1.0], [])


def test_dykstra_sweep_cap_raises() -> None:
    """
    ARRANGE: two sets and a cap of one sweep
    ACT:     dykstra_project a point outside both
    ASSERT:  raises ConvergenceError
    """
    sets = [orthant_cone(2).project, halfspace_cone([1.0, -1.0]).project]

    with pytest.raises(ConvergenceError):
        dykstra_project([2.0, -1.0], sets, max_sweeps=1)


def test_linear_cone_gauge_evaluate_inside() -> None:
    """
    ARRANGE: <(1, 2), x> on the orthant
    ACT:     evaluate at (1, 1)
    ASSERT:  returns 3
    """
    g = make_linear_cone_gauge([1.0, 2.0], orthant_cone(2))

    assert g.evaluate([1.0, 1.0]) == 3.0


def test_linear_cone_gauge_evaluate_outside() -> None:
    """
    ARRANGE: <(1, 2), x> on the orthant
    ACT:     evaluate at (-1, 1)
    ASSERT:  returns +inf
    """
    g = make_linear_cone_gauge([1.0, 2.0], orthant_cone(2))

    assert g.evaluate([-1.0, 1.0]) == np.inf


def test_linear_cone_gauge_rejects_coefficients_outside_dual_cone() -> None:
    """
    ARRANGE: negative coefficient on the orthant
    ACT:     make_linear_cone_gauge
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        make_linear_cone_gauge([-1.0, 0.0], orthant_cone(2))


def test_linear_cone_gauge_level_projection() -> None:
    """
    ARRANGE: <(1, 1), x> on the orthant
    ACT:     project (2, 2) onto level 1
    ASSERT:  returns (0.5, 0.5)
    """
    g = make_linear_cone_gauge([1.0, 1.0], orthant_cone(2))

    actual = g.project_level_set([2.0, 2.0], 1.0)

    assert np.allclose(actual, [0.5, 0.5], atol=1e-9)


def test_linear_cone_gauge_prox() -> None:
    """
    ARRANGE: <(1, 1), x> on the orthant
    ACT:     Moreau prox with t = 1 at (3, 0.5)
    ASSERT:  returns P_K(x - t c) = (2, 0)
    """
    g = make_linear_cone_gauge([1.0, 1.0], orthant_cone(2))

    actual = g.prox_operator(1.0, np.array([3.0, 0.5]))

    assert np.allclose(actual, [2.0, 0.0])


def test_cone_indicator_kind() -> None:
    """
    ARRANGE: orthant
    ACT:     make_cone_indicator
    ASSERT:  kind is cone_indicator
    """
    assert make_cone_indicator(orthant_cone(2)).kind == "cone_indicator"


def test_cone_indicator_polar_is_polar_cone() -> None:
    """
    ARRANGE: orthant indicator
    ACT:     evaluate its polar at (-1, -1)
    ASSERT:  returns 0 on the nonpositive orthant
    """
    polar = make_cone_indicator(orthant_cone(2)).polar()

    assert polar.evaluate([-1.0, -1.0]) == 0.0


def test_cone_indicator_polar_outside_is_infinite() -> None:
    """
    ARRANGE: orthant indicator
    ACT:     evaluate its polar at (1, 0)
    ASSERT:  returns +inf
    """
    polar = make_cone_indicator(orthant_cone(2)).polar()

    assert polar.evaluate([1.0, 0.0]) == np.inf


def test_linear_cone_gauge_is_subadditive(rng: np.random.Generator) -> None:
    """
    ARRANGE: <(1, 2, 3), x> over the orthant and 100 pairs of cone points
    ACT:     evaluate at x, y and x + y
    ASSERT:  kappa(x + y) <= kappa(x) + kappa(y) for every pair
    """
    g = make_linear_cone_gauge((1.0, 2.0, 3.0), orthant_cone(3))
    pairs = np.abs(rng.normal(size=(100, 2, 3)))

    excess = max(g.evaluate(x + y) - g.evaluate(x) - g.evaluate(y) for x, y in pairs)

    assert excess <= 1e-12


def test_linear_cone_level_projection_is_idempotent(rng: np.random.Generator) -> None:
    """
    ARRANGE: <(1, 1), x> over the orthant and 20 random points
    ACT:     project onto the level set of radius 1 twice
    ASSERT:  the second projection moves no point beyond the Dykstra tolerance
    """
    g = make_linear_cone_gauge((1.0, 1.0), orthant_cone(2))
    points = rng.normal(scale=2.0, size=(20, 2))

    moves = [
        np.linalg.norm(g.project_level_set(p, 1.0) - p)
        for p in (g.project_level_set(x, 1.0) for x in points)
    ]

    assert max(moves) <= 1e-8


def test_halfspace_indicator_projection_is_nonexpansive(
    rng: np.random.Generator,
) -> None:
    """
    ARRANGE: indicator of the halfspace x1 + x2 <= 0 and 200 random pairs
    ACT:     project both points onto the zero level set
    ASSERT:  |P(x) - P(y)| <= |x - y| for every pair
    """
    g = make_cone_indicator(halfspace_cone((1.0, 1.0)))
    pairs = rng.normal(size=(200, 2, 2))

    excess = max(
        np.linalg.norm(g.project_level_set(x, 0.0) - g.project_level_set(y, 0.0))
        - np.linalg.norm(x - y)
        for x, y in pairs
    )

    assert excess <= 1e-12
