# gauges/test_norms.py

import numpy as np
import pytest

from polar_gauge.gauges import (
    make_norm_gauge,
    project_l1_ball,
    project_weighted_l1_ball,
)

pytestmark = pytest.mark.unit


def test_l1_evaluate() -> None:
    """
    ARRANGE: l1 norm on R^2
    ACT:     evaluate at (3, -4)
    ASSERT:  returns 7
    """
    assert make_norm_gauge("l1", 2).evaluate([3.0, -4.0]) == 7.0


def test_l2_evaluate() -> None:
    """
    ARRANGE: l2 norm on R^2
    ACT:     evaluate at (3, -4)
    ASSERT:  returns 5
    """
    assert make_norm_gauge("l2", 2).evaluate([3.0, -4.0]) == 5.0


def test_linf_evaluate() -> None:
    """
    ARRANGE: linf norm on R^2
    ACT:     evaluate at (3, -4)
    ASSERT:  returns 4
    """
    assert make_norm_gauge("linf", 2).evaluate([3.0, -4.0]) == 4.0


def test_l1_polar_is_linf() -> None:
    """
    ARRANGE: l1 norm
    ACT:     polar
    ASSERT:  polar kind is linf
    """
    assert make_norm_gauge("l1", 3).polar().kind == "linf"


def test_l2_polar_is_l2() -> None:
    """
    ARRANGE: l2 norm
    ACT:     polar
    ASSERT:  polar kind is l2
    """
    assert make_norm_gauge("l2", 3).polar().kind == "l2"


def test_unknown_norm_kind_raises() -> None:
    """
    ARRANGE: unsupported norm name
    ACT:     make_norm_gauge
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        make_norm_gauge("l3", 2)


def test_l2_level_projection_scales_to_radius() -> None:
    """
    ARRANGE: point (3, 4) outside the unit l2 ball
    ACT:     project_level_set with radius 1
    ASSERT:  returns (0.6, 0.8)
    """
    actual = make_norm_gauge("l2", 2).project_level_set([3.0, 4.0], 1.0)

    assert np.allclose(actual, [0.6, 0.8])


def test_linf_level_projection_clips() -> None:
    """
    ARRANGE: point (3, -0.5)
    ACT:     project onto the linf ball of radius 1
    ASSERT:  returns (1, -0.5)
    """
    actual = make_norm_gauge("linf", 2).project_level_set([3.0, -0.5], 1.0)

    assert np.allclose(actual, [1.0, -0.5])


def test_l1_level_projection_lands_on_boundary(rng: np.random.Generator) -> None:
    """
    ARRANGE: random point far outside the unit l1 ball
    ACT:     project_l1_ball with radius 1
    ASSERT:  projection has l1 norm 1
    """
    x = 5 * rng.normal(size=6)

    actual = project_l1_ball(x, 1.0)

    assert np.abs(actual).sum() == pytest.approx(1.0)


def test_weighted_l1_projection() -> None:
    """
    ARRANGE: point (3, 1) with weights (1, 2) and radius 1
    ACT:     project_weighted_l1_ball
    ASSERT:  returns (1, 0)
    """
    actual = project_weighted_l1_ball([3.0, 1.0], [1.0, 2.0], 1.0)

    assert np.allclose(actual, [1.0, 0.0])


def test_weighted_l1_projection_keeps_inside_point() -> None:
    """
    ARRANGE: point inside the weighted ball
    ACT:     project_weighted_l1_ball
    ASSERT:  point is returned unchanged
    """
    actual = project_weighted_l1_ball([0.1, -0.1], [1.0, 2.0], 1.0)

    assert np.array_equal(actual, [0.1, -0.1])


def test_weighted_l1_projection_zero_radius() -> None:
    """
    ARRANGE: radius zero
    ACT:     project_weighted_l1_ball
    ASSERT:  returns the origin
    """
    actual = project_weighted_l1_ball([3.0, 1.0], [1.0, 1.0], 0.0)

    assert np.array_equal(actual, [0.0, 0.0])


def test_weighted_l1_projection_rejects_zero_weight() -> None:
    """
    ARRANGE: a zero weight
    ACT:     project_weighted_l1_ball
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        project_weighted_l1_ball([1.0, 1.0], [1.0, 0.0], 1.0)


@pytest.mark.parametrize("kind", ["l1", "l2", "linf"])
def test_norm_satisfies_polar_gauge_inequality(
    kind: str,
    rng: np.random.Generator,
) -> None:
    """
    ARRANGE: norm gauge, its polar and 200 random pairs
    ACT:     compare <x, y> with kappa(x) kappa°(y)
    ASSERT:  the inner product never exceeds the product
    """
    g = make_norm_gauge(kind, 3)
    polar = g.polar()
    pairs = rng.normal(size=(200, 2, 3))

    excess = max(x @ y - g.evaluate(x) * polar.evaluate(y) for x, y in pairs)

    assert excess <= 1e-12


@pytest.mark.parametrize("kind", ["l1", "l2", "linf"])
def test_norm_is_subadditive(kind: str, rng: np.random.Generator) -> None:
    """
    ARRANGE: norm gauge and 200 random pairs
    ACT:     evaluate at x, y and x + y
    ASSERT:  kappa(x + y) <= kappa(x) + kappa(y) for every pair
    """
    g = make_norm_gauge(kind, 3)
    pairs = rng.normal(size=(200, 2, 3))

    excess = max(g.evaluate(x + y) - g.evaluate(x) - g.evaluate(y) for x, y in pairs)

    assert excess <= 1e-12


@pytest.mark.parametrize("kind", ["l1", "l2", "linf"])
def test_norm_is_positively_homogeneous(kind: str, rng: np.random.Generator) -> None:
    """
    ARRANGE: norm gauge and a random point
    ACT:     evaluate at x and 4.5x
    ASSERT:  value scales by 4.5
    """
    g = make_norm_gauge(kind, 3)
    x = rng.normal(size=3)

    assert g.evaluate(4.5 * x) == pytest.approx(4.5 * g.evaluate(x), rel=1e-12)


@pytest.mark.parametrize("kind", ["l1", "l2", "linf"])
def test_level_projection_is_idempotent(kind: str, rng: np.random.Generator) -> None:
    """
    ARRANGE: norm gauge and 50 random points
    ACT:     project onto the level set of radius 0.8 twice
    ASSERT:  the second projection does not move the point
    """
    g = make_norm_gauge(kind, 3)
    points = rng.normal(scale=2.0, size=(50, 3))

    moves = [
        np.linalg.norm(g.project_level_set(p, 0.8) - p)
        for p in (g.project_level_set(x, 0.8) for x in points)
    ]

    assert max(moves) <= 1e-9


@pytest.mark.parametrize("kind", ["l1", "l2", "linf"])
def test_level_projection_is_nonexpansive(kind: str, rng: np.random.Generator) -> None:
    """
    ARRANGE: norm gauge and 200 random pairs
    ACT:     project both points onto the level set of radius 0.8
    ASSERT:  |P(x) - P(y)| <= |x - y| for every pair
    """
    g = make_norm_gauge(kind, 3)
    pairs = rng.normal(scale=2.0, size=(200, 2, 3))

    excess = max(
        np.linalg.norm(g.project_level_set(x, 0.8) - g.project_level_set(y, 0.8))
        - np.linalg.norm(x - y)
        for x, y in pairs
    )

    assert excess <= 1e-12
