# convolution/test_max_convolve.py

import numpy as np
import pytest

from polar_gauge.convolution import (
    convolution_grid,
    max_convolve,
    sample_convolution_level_set,
    sample_unit_level_set,
    unit_directions,
)
from polar_gauge.errors import CapabilityError
from polar_gauge.gauges import make_norm_gauge, make_zero_indicator

pytestmark = pytest.mark.unit


def test_self_convolution_halves_gauge() -> None:
    """
    ARRANGE: l1 convolved with itself
    ACT:     max_convolve at (2, 0)
    ASSERT:  value is l1(x) / 2 = 1
    """
    l1 = make_norm_gauge("l1", 2)

    actual = max_convolve(l1, l1, [2.0, 0.0])

    assert actual.value == pytest.approx(1.0, abs=1e-3)


def test_self_convolution_splits_in_half() -> None:
    """
    ARRANGE: l2 convolved with itself
    ACT:     max_convolve at (2, 0)
    ASSERT:  splitter is close to x / 2
    """
    l2 = make_norm_gauge("l2", 2)

    actual = max_convolve(l2, l2, [2.0, 0.0])

    assert np.linalg.norm(actual.splitter - [1.0, 0.0]) <= 1e-2


def test_convolution_at_origin() -> None:
    """
    ARRANGE: l1 and l2
    ACT:     max_convolve at the origin
    ASSERT:  value is zero
    """
    actual = max_convolve(make_norm_gauge("l1", 2), make_norm_gauge("l2", 2), [0, 0])

    assert actual.value == 0.0


def test_convolution_with_origin_indicator_is_not_attained() -> None:
    """
    ARRANGE: two origin indicators, whose convolution is infinite off the origin
    ACT:     max_convolve at (1, 0)
    ASSERT:  no finite split is found
    """
    zero = make_zero_indicator(2)

    actual = max_convolve(zero, zero, [1.0, 0.0])

    assert actual.attained is False


def test_convolution_rejects_dimension_mismatch() -> None:
    """
    ARRANGE: gauges on R^2 and R^3
    ACT:     max_convolve
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        max_convolve(make_norm_gauge("l1", 2), make_norm_gauge("l1", 3), [1.0, 0.0])


def test_convolution_grid_centre() -> None:
    """
    ARRANGE: point (2, 0)
    ACT:     convolution_grid
    ASSERT:  box spans [-1, 3] along the first axis
    """
    grid = convolution_grid([2.0, 0.0])

    assert (grid.lower[0], grid.upper[0]) == (-1.0, 3.0)


def test_unit_directions_shape() -> None:
    """
    ARRANGE: 8 three-dimensional directions
    ACT:     unit_directions
    ASSERT:  shape is (8, 3)
    """
    assert unit_directions(3, 8).shape == (8, 3)


def test_unit_directions_are_unit() -> None:
    """
    ARRANGE: 50 three-dimensional directions
    ACT:     unit_directions
    ASSERT:  every row has norm 1
    """
    norms = np.linalg.norm(unit_directions(3, 50), axis=1)

    assert np.allclose(norms, 1.0)


def test_unit_directions_start_on_first_axis() -> None:
    """
    ARRANGE: 4 planar directions
    ACT:     unit_directions
    ASSERT:  first direction is (1, 0)
    """
    assert np.allclose(unit_directions(2, 4)[0], [1.0, 0.0])


def test_unit_directions_reject_four_dimensions() -> None:
    """
    ARRANGE: dimension 4
    ACT:     unit_directions
    ASSERT:  raises CapabilityError
    """
    with pytest.raises(CapabilityError):
        unit_directions(4, 10)


def test_sample_unit_level_set_l1() -> None:
    """
    ARRANGE: l1 norm and direction (0.6, 0.8)
    ACT:     sample_unit_level_set
    ASSERT:  boundary point is u / 1.4
    """
    actual = sample_unit_level_set(make_norm_gauge("l1", 2), np.array([[0.6, 0.8]]))

    assert np.allclose(actual, [[0.6 / 1.4, 0.8 / 1.4]])


def test_sample_unit_level_set_drops_infinite_directions() -> None:
    """
    ARRANGE: origin indicator, infinite in every direction
    ACT:     sample_unit_level_set
    ASSERT:  no boundary point is returned
    """
    actual = sample_unit_level_set(make_zero_indicator(2), unit_directions(2, 8))

    assert len(actual) == 0


def test_sampled_convolution_level_set_lies_inside() -> None:
    """
    ARRANGE: l1 and l2, 24 directions
    ACT:     sample_convolution_level_set
    ASSERT:  every sample has convolution value at most 1 (plus grid error)
    """
    l1, l2 = make_norm_gauge("l1", 2), make_norm_gauge("l2", 2)
    points = sample_convolution_level_set(l1, l2, unit_directions(2, 24))

    values = [max_convolve(l1, l2, point).value for point in points]

    assert max(values) <= 1 + 1e-2
