# schemas/test_types.py

import numpy as np
import pytest
from pydantic import TypeAdapter, ValidationError

from polar_gauge.schemas.types import (
    FloatTuple,
    MatrixReq,
    NonNegativeFloat,
    PositiveFloat,
    VectorReq,
)

pytestmark = pytest.mark.unit


def test_float_tuple_accepts_numpy_array() -> None:
    """
    ARRANGE: numpy array
    ACT:     validate as FloatTuple
    ASSERT:  returns a tuple of floats
    """
    actual = TypeAdapter(FloatTuple).validate_python(np.array([1.0, 2.0]))

    assert actual == (1.0, 2.0)


def test_vector_req_rejects_empty() -> None:
    """
    ARRANGE: empty list
    ACT:     validate as VectorReq
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        TypeAdapter(VectorReq).validate_python([])


def test_matrix_req_accepts_2d_array() -> None:
    """
    ARRANGE: 2 x 1 numpy array
    ACT:     validate as MatrixReq
    ASSERT:  returns two single-entry rows
    """
    actual = TypeAdapter(MatrixReq).validate_python(np.array([[1.0], [2.0]]))

    assert actual == ((1.0,), (2.0,))


def test_positive_float_rejects_zero() -> None:
    """
    ARRANGE: zero
    ACT:     validate as PositiveFloat
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        TypeAdapter(PositiveFloat).validate_python(0.0)


def test_positive_float_rejects_infinity() -> None:
    """
    ARRANGE: +inf
    ACT:     validate as PositiveFloat
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        TypeAdapter(PositiveFloat).validate_python(float("inf"))


def test_non_negative_float_accepts_zero() -> None:
    """
    ARRANGE: zero
    ACT:     validate as NonNegativeFloat
    ASSERT:  returns zero
    """
    actual = TypeAdapter(NonNegativeFloat).validate_python(0.0)

    assert actual == 0.0
