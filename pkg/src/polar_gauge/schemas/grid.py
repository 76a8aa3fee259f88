# schemas/grid.py

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .types import VectorReq

DEFAULT_POINTS = 41
DEFAULT_ROUNDS = 3
DEFAULT_SHRINK = 0.2


class GridSpec(BaseModel):
    """
    Box grid with local refinement used by the brute-force oracles.

    The first sweep covers the box [lower, upper] with `points` evenly spaced
    values per dimension. Each of the `rounds` refinement sweeps recentres the box
    at the incumbent and multiplies its half-widths by `shrink`.

    Args:
        lower (VectorReq): Lower corner of the initial box.
        upper (VectorReq): Upper corner of the initial box.
        points (int): Grid points per dimension, at least 3.
        rounds (int): Number of refinement sweeps after the initial one.
        shrink (float): Half-width multiplier per refinement, in (0, 1).

    Returns:
        GridSpec: Immutable grid description.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    lower: VectorReq
    upper: VectorReq
    points: int = Field(DEFAULT_POINTS, ge=3)
    rounds: int = Field(DEFAULT_ROUNDS, ge=0)
    shrink: float = Field(DEFAULT_SHRINK, gt=0, lt=1)

    @model_validator(mode="after")
    def _check_box(self) -> "GridSpec":
        if len(self.lower) != len(self.upper):
            raise ValueError("lower and upper must have the same dimension")
        if any(lo >= hi for lo, hi in zip(self.lower, self.upper, strict=True)):
            raise ValueError("lower must be strictly below upper in every dimension")
        return self

    @property
    def dim(self) -> int:
        """Dimension of the gridded box."""
        return len(self.lower)

    @property
    def resolution(self) -> float:
        """Widest cell of the final refinement sweep."""
        widths = np.subtract(self.upper, self.lower)
        return float(widths.max() / (self.points - 1) * self.shrink**self.rounds)

    @classmethod
    def around(
        cls,
        center: ArrayLike,
        half_width: float,
        *,
        points: int = DEFAULT_POINTS,
        rounds: int = DEFAULT_ROUNDS,
        shrink: float = DEFAULT_SHRINK,
    ) -> "GridSpec":
        """
        Builds a cubic grid centred at a point.

        Args:
            center (ArrayLike): Centre of the box.
            half_width (float): Half side length; must be positive.
            points (int): Grid points per dimension.
            rounds (int): Refinement sweeps.
            shrink (float): Half-width multiplier per refinement.

        Returns:
            GridSpec: The centred grid.
        """
        middle = np.asarray(center, dtype=np.float64)
        return cls(
            lower=tuple((middle - half_width).tolist()),
            upper=tuple((middle + half_width).tolist()),
            points=points,
            rounds=rounds,
            shrink=shrink,
        )
