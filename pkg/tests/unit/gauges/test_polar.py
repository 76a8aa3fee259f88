# gauges/test_polar.py

import pytest

from polar_gauge.gauges import make_norm_gauge, polar_eval_oracle
from polar_gauge.schemas import GridSpec

pytestmark = pytest.mark.unit

BOX = GridSpec(lower=(-1.5, -1.5), upper=(1.5, 1.5))


def test_polar_oracle_approaches_closed_form() -> None:
    """
    ARRANGE: l1 norm, whose polar at (1, 2) is linf = 2
    ACT:     polar_eval_oracle over a box covering the unit ball
    ASSERT:  estimate is within 1e-2 of 2
    """
    actual = polar_eval_oracle(make_norm_gauge("l1", 2), [1.0, 2.0], BOX)

    assert actual == pytest.approx(2.0, abs=1e-2)


def test_polar_oracle_never_exceeds_polar() -> None:
    """
    ARRANGE: l2 norm, whose polar at (3, 4) is 5
    ACT:     polar_eval_oracle
    ASSERT:  estimate is a lower bound
    """
    actual = polar_eval_oracle(make_norm_gauge("l2", 2), [3.0, 4.0], BOX)

    assert actual <= 5.0 + 1e-12


def test_polar_oracle_at_origin_is_zero() -> None:
    """
    ARRANGE: l2 norm and y = 0
    ACT:     polar_eval_oracle
    ASSERT:  returns 0
    """
    assert polar_eval_oracle(make_norm_gauge("l2", 2), [0.0, 0.0], BOX) == 0.0


def test_polar_oracle_never_decreases_with_refinement() -> None:
    """
    ARRANGE: l2 norm, y = (3, 4) and grids with zero to four refinements
    ACT:     polar_eval_oracle on each grid
    ASSERT:  more refinement never gives a smaller lower bound
    """
    g = make_norm_gauge("l2", 2)

    values = [
        polar_eval_oracle(
            g,
            [3.0, 4.0],
            GridSpec(lower=(-1.5, -1.5), upper=(1.5, 1.5), rounds=rounds),
        )
        for rounds in range(5)
    ]

    assert all(b >= a for a, b in zip(values, values[1:], strict=False))
