# gauges/base.py

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Protocol

import numpy as np
from numpy.typing import ArrayLike, NDArray

from polar_gauge._utils import Vector, as_vector
from polar_gauge.errors import CapabilityError

type BatchEvaluator = Callable[[NDArray[np.float64]], NDArray[np.float64]]
type LevelProjector = Callable[[Vector, float], Vector]
type Projector = Callable[[Vector], Vector]
type ProxOperator = Callable[[float, Vector], Vector]


class GaugeFactory(Protocol):
    """
    Zero-argument callable building a related gauge lazily (e.g. the polar).
    """

    def __call__(self) -> "Gauge": ...


@dataclass(frozen=True, slots=True)
class Gauge:
    """
    A nonnegative, positively homogeneous convex function vanishing at the origin,
    exposed through evaluation and level-set projection.

    +inf encodes points outside the domain; NaN is never returned.

    Args:
        kind (str): Catalog name, used to pick closed-form fast paths.
        dim (int): Ambient dimension.
        evaluate_many (BatchEvaluator): Maps a (k, dim) batch to k values.
        level_projector (LevelProjector): Euclidean projection onto [kappa <= r].
        domain_projector (Projector | None): Projection onto the closure of the
            domain; None means the domain is the whole space.
        polar_factory (GaugeFactory | None): Builds the closed-form polar gauge.
        prox_operator (ProxOperator | None): Moreau prox `(t, x) -> prox_{t kappa}(x)`.
        is_continuous (bool): Whether the gauge is finite everywhere.
        params (Mapping[str, object]): Read-only construction parameters.
    """

    kind: str
    dim: int
    evaluate_many: BatchEvaluator
    level_projector: LevelProjector
    domain_projector: Projector | None = None
    polar_factory: GaugeFactory | None = None
    prox_operator: ProxOperator | None = None
    is_continuous: bool = True
    params: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"gauge dimension must be at least 1, got {self.dim}")
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    def evaluate(self, x: ArrayLike) -> float:
        """
        Evaluates the gauge at a single point.

        Args:
            x (ArrayLike): Point of length `dim`.

        Returns:
            float: kappa(x), possibly +inf.
        """
        point = as_vector(x, self.dim)
        return float(self.evaluate_many(point[np.newaxis, :])[0])

    def project_level_set(self, x: ArrayLike, radius: float) -> Vector:
        """
        Projects a point onto the level set [kappa <= radius].

        Points already inside the level set are returned unchanged.

        Args:
            x (ArrayLike): Point of length `dim`.
            radius (float): Level, nonnegative.

        Returns:
            Vector: The projection.

        Raises:
            ValueError: If the radius is negative or not finite.
        """
        point = as_vector(x, self.dim)
        level = float(radius)
        if not np.isfinite(level) or level < 0:
            raise ValueError(f"radius must be finite and nonnegative, got {radius!r}")

        if self.evaluate(point) <= level:
            return point
        return self.level_projector(point, level)

    def project_domain(self, x: ArrayLike) -> Vector:
        """
        Projects a point onto the closure of the domain.

        Args:
            x (ArrayLike): Point of length `dim`.

        Returns:
            Vector: The projection, or the point itself for finite gauges.
        """
        point = as_vector(x, self.dim)
        if self.domain_projector is None:
            return point
        return self.domain_projector(point)

    @property
    def has_domain(self) -> bool:
        """Whether the gauge restricts its domain."""
        return self.domain_projector is not None

    def polar(self) -> "Gauge":
        """
        Returns the closed-form polar gauge.

        Returns:
            Gauge: The polar.

        Raises:
            CapabilityError: If no closed-form polar is known.
        """
        if self.polar_factory is None:
            raise CapabilityError(f"gauge '{self.kind}' has no closed-form polar")
        return self.polar_factory()
