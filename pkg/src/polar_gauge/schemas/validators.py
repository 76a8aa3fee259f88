# schemas/validators.py

import math
from collections.abc import Sequence

import numpy as np


def to_float_tuple(value: object) -> tuple[float, ...]:
    """
    Converts a sequence (list, tuple or numpy array) of numbers into a tuple of
    finite floats.

    - Booleans are rejected even though they are ints in Python.
    - NaN and infinite entries are rejected.

    Args:
        value (object): The input sequence.

    Returns:
        tuple[float, ...]: The converted coordinates.

    Raises:
        ValueError: If the input is not a flat numeric sequence of finite values.
    """
    if isinstance(value, np.ndarray):
        value = value.tolist()

    if isinstance(value, str) or not isinstance(value, Sequence):
        raise ValueError(f"expected a sequence of numbers, got {type(value).__name__}")

    coords = []
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int | float):
            raise ValueError(f"expected a number, got {item!r}")
        if not math.isfinite(item):
            raise ValueError("entries must be finite")
        coords.append(float(item))
    return tuple(coords)


def to_matrix(value: object) -> tuple[tuple[float, ...], ...]:
    """
    Converts a row-major nested sequence into a rectangular tuple-of-tuples matrix.

    Args:
        value (object): Nested sequence (or 2-D numpy array) of numbers.

    Returns:
        tuple[tuple[float, ...], ...]: The matrix rows.

    Raises:
        ValueError: If the input is empty, ragged or holds non-finite entries.
    """
    if isinstance(value, np.ndarray):
        value = value.tolist()

    if isinstance(value, str) or not isinstance(value, Sequence) or not value:
        raise ValueError("expected a non-empty row-major array")

    rows = tuple(to_float_tuple(row) for row in value)
    if len({len(row) for row in rows}) != 1 or not rows[0]:
        raise ValueError("matrix rows must be non-empty and of equal length")
    return rows


def require_non_empty(value: tuple[float, ...]) -> tuple[float, ...]:
    """
    Validates that a coordinate tuple has at least one entry.

    Args:
        value (tuple[float, ...]): The coordinates.

    Returns:
        tuple[float, ...]: The unchanged coordinates.

    Raises:
        ValueError: If the tuple is empty.
    """
    if not value:
        raise ValueError("vector must have at least one entry")
    return value
