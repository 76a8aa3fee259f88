# polar_gauge/_utils.py

import numpy as np
from numpy.typing import ArrayLike, NDArray

type Vector = NDArray[np.float64]


def as_vector(value: ArrayLike, dim: int | None = None) -> Vector:
    """
    Converts an array-like into a one-dimensional float vector with finite entries.

    Args:
        value (ArrayLike): Coordinates to convert.
        dim (int | None): Expected length, if the caller knows it.

    Returns:
        Vector: A fresh float64 array.

    Raises:
        ValueError: If the input is not one-dimensional, has the wrong length, or
            contains NaN or infinite entries.
    """
    vector = np.array(value, dtype=np.float64)
    if vector.ndim != 1:
        raise ValueError(f"expected a one-dimensional vector, got shape {vector.shape}")
    if dim is not None and vector.size != dim:
        raise ValueError(f"expected a vector of length {dim}, got {vector.size}")
    if not np.all(np.isfinite(vector)):
        raise ValueError("vector entries must be finite")
    return vector


def require_positive(value: float, name: str) -> float:
    """
    Validates that a scalar parameter is finite and strictly positive.

    Args:
        value (float): Parameter value.
        name (str): Parameter name used in the error message.

    Returns:
        float: The value as a float.

    Raises:
        ValueError: If the value is not a finite positive number.
    """
    number = float(value)
    if not np.isfinite(number) or number <= 0:
        raise ValueError(f"{name} must be a finite positive number, got {value!r}")
    return number
