# schemas/test_validators.py

import numpy as np
import pytest

from polar_gauge.schemas import validators

pytestmark = pytest.mark.unit


def test_to_float_tuple_converts_list() -> None:
    """
    ARRANGE: list of ints and floats
    ACT:     to_float_tuple
    ASSERT:  returns a tuple of floats
    """
    actual = validators.to_float_tuple([1, 2.5])

    assert actual == (1.0, 2.5)


def test_to_float_tuple_converts_numpy_array() -> None:
    """
    ARRANGE: numpy array
    ACT:     to_float_tuple
    ASSERT:  returns the same coordinates as a tuple
    """
    actual = validators.to_float_tuple(np.array([0.5, -1.0]))

    assert actual == (0.5, -1.0)


def test_to_float_tuple_rejects_bool_entry() -> None:
    """
    ARRANGE: sequence holding a boolean
    ACT:     to_float_tuple
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        validators.to_float_tuple([1.0, True])


def test_to_float_tuple_rejects_nan() -> None:
    """
    ARRANGE: sequence holding NaN
    ACT:     to_float_tuple
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        validators.to_float_tuple([float("nan")])


def test_to_float_tuple_rejects_string() -> None:
    """
    ARRANGE: a string, which is a sequence of characters
    ACT:     to_float_tuple
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        validators.to_float_tuple("1,2")


def test_to_float_tuple_empty_sequence() -> None:
    """
    ARRANGE: empty list
    ACT:     to_float_tuple
    ASSERT:  returns an empty tuple
    """
    actual = validators.to_float_tuple([])

    assert actual == ()


def test_to_matrix_converts_nested_lists() -> None:
    """
    ARRANGE: 2 x 2 nested list
    ACT:     to_matrix
    ASSERT:  returns tuple rows
    """
    actual = validators.to_matrix([[1, 0], [0, 1]])

    assert actual == ((1.0, 0.0), (0.0, 1.0))


def test_to_matrix_rejects_ragged_rows() -> None:
    """
    ARRANGE: rows of different lengths
    ACT:     to_matrix
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        validators.to_matrix([[1.0, 2.0], [3.0]])


def test_to_matrix_rejects_empty() -> None:
    """
    ARRANGE: empty list
    ACT:     to_matrix
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        validators.to_matrix([])


def test_require_non_empty_passes_coordinates_through() -> None:
    """
    ARRANGE: one coordinate
    ACT:     require_non_empty
    ASSERT:  returns the input unchanged
    """
    actual = validators.require_non_empty((1.0,))

    assert actual == (1.0,)


def test_require_non_empty_rejects_empty() -> None:
    """
    ARRANGE: empty tuple
    ACT:     require_non_empty
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        validators.require_non_empty(())
