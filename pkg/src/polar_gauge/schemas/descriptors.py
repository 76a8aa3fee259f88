# schemas/descriptors.py

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .types import FloatTuple, MatrixReq, NonNegativeFloat, PositiveFloat

type GaugeKind = Literal[
    "l1",
    "l2",
    "linf",
    "linear_cone",
    "cone_indicator",
    "zero_indicator",
]

type LiftedKind = Literal["shifted_l1", "smoothed_halfspace"]

type Command = Literal[
    "envelope",
    "contour",
    "bp-solve",
    "lagrange-solve",
    "p4a",
    "ema",
    "check",
]

type ParamValue = float | FloatTuple | str


# ──────────────────────────────── Gauges ────────────────────────────────
class GaugeDescriptor(BaseModel):
    """
    Declarative description of a catalog gauge, shared by instance files and the
    command line.

    Recognised params by kind:
        - l1, l2, linf: `scale` (optional positive multiplier).
        - linear_cone: `c` (coefficients), `cone` ("orthant" or "halfspace") and
          `normal` (for halfspace cones).
        - cone_indicator: `cone` and `normal` as above.
        - zero_indicator: none.

    Args:
        kind (GaugeKind): Catalog entry to build.
        dim (int): Ambient dimension, at least 1.
        params (dict[str, ParamValue]): Kind-specific parameters.

    Returns:
        GaugeDescriptor: Immutable, validated descriptor.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    kind: GaugeKind
    dim: int = Field(..., ge=1)
    params: dict[str, ParamValue] = Field(default_factory=dict)


# ───────────────────────────── Lifted functions ─────────────────────────────
class LiftedDescriptor(BaseModel):
    """
    Declarative description of a lifted (perspective) test function.

    Recognised params by kind:
        - shifted_l1: `c` (positive shift, default 1).
        - smoothed_halfspace: `epsilon` (default 0.5) and `offset` (default 1);
          only two-dimensional.

    Args:
        kind (LiftedKind): Function family.
        dim (int): Dimension of the unlifted variable.
        params (dict[str, float]): Kind-specific parameters.

    Returns:
        LiftedDescriptor: Immutable, validated descriptor.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    kind: LiftedKind
    dim: int = Field(..., ge=1)
    params: dict[str, float] = Field(default_factory=dict)


# ──────────────────────────────── Problems ────────────────────────────────
class ProblemDescriptor(BaseModel):
    """
    Regularised gauge problem instance as stored on disk:

        minimise kappa(x) + alpha |x|  subject to  rho(b - A x) <= sigma

    Args:
        A (MatrixReq): Row-major m x n matrix.
        b (FloatTuple): Right-hand side of length m.
        sigma (NonNegativeFloat): Residual budget.
        alpha (PositiveFloat): Regularisation weight.
        kappa (GaugeDescriptor): Objective gauge on R^n.
        rho (GaugeDescriptor): Residual gauge on R^m.
        generator (FloatTuple | None): Signal the right-hand side was built
            from, when known.

    Returns:
        ProblemDescriptor: Immutable, validated instance.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    A: MatrixReq
    b: FloatTuple
    sigma: NonNegativeFloat = 0.0
    alpha: PositiveFloat = 0.1
    kappa: GaugeDescriptor
    rho: GaugeDescriptor
    generator: FloatTuple | None = None

    @model_validator(mode="after")
    def _check_shapes(self) -> "ProblemDescriptor":
        rows, cols = len(self.A), len(self.A[0])
        if len(self.b) != rows:
            raise ValueError(f"b has length {len(self.b)}, expected {rows}")
        if self.kappa.dim != cols:
            raise ValueError(f"kappa.dim is {self.kappa.dim}, expected {cols}")
        if self.rho.dim != rows:
            raise ValueError(f"rho.dim is {self.rho.dim}, expected {rows}")
        if self.generator is not None and len(self.generator) != cols:
            raise ValueError(f"generator must have length {cols}")
        return self


# ──────────────────────────────── Runs ────────────────────────────────
class RunConfig(BaseModel):
    """
    Fully resolved settings for one command-line run.

    Args:
        command (Command): Command to execute.
        alpha (PositiveFloat | None): Envelope or regularisation parameter; None
            keeps the command default (1, or the instance value for solvers).
        seed (int): Seed for every random draw of the run.
        gauge (GaugeDescriptor | None): Gauge for envelope and contour commands.
        lifted (LiftedDescriptor | None): Lifted function for p4a and ema.
        instance (Path | None): Problem instance file; None means the bundled one.
        point (FloatTuple | None): Evaluation point or starting point.
        out (Path | None): Report or CSV destination; None means stdout.
        trace (Path | None): Iteration trace CSV destination.
        compare (bool): Also run the Lagrange baseline.
        max_iterations (int | None): Iteration cap override.
        tolerances (dict[str, float]): Tolerance overrides by field name.
        suite (str): Check suite name.
        bounds (PositiveFloat): Half side of the square contour grid.
        resolution (int): Contour grid points per axis.

    Returns:
        RunConfig: Immutable, validated run configuration.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    command: Command
    alpha: PositiveFloat | None = None
    seed: int = 42
    gauge: GaugeDescriptor | None = None
    lifted: LiftedDescriptor | None = None
    instance: Path | None = None
    point: FloatTuple | None = None
    out: Path | None = None
    trace: Path | None = None
    compare: bool = False
    max_iterations: int | None = Field(None, ge=0)
    tolerances: dict[str, float] = Field(default_factory=dict)
    suite: Literal["envelope", "convolution", "duality", "perspective", "all"] = "all"
    bounds: PositiveFloat = 1.5
    resolution: int = Field(101, ge=2)

    @model_validator(mode="after")
    def _check_tolerances(self) -> "RunConfig":
        bad = sorted(key for key, value in self.tolerances.items() if not value > 0)
        if bad:
            raise ValueError(f"tolerance overrides must be positive: {', '.join(bad)}")
        return self
