# schemas/reports.py

from enum import StrEnum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from .types import FloatTuple


class ProxCase(StrEnum):
    """
    Branch of the polar proximal map that produced a result.
    """

    DOMAIN_PROJECTION = "domain_projection"
    LEVEL_SET_ROOT = "level_set_root"
    ZERO_ENVELOPE = "zero_envelope"


# ──────────────────────────────── Traces ────────────────────────────────
class IterationRecord(BaseModel):
    """
    One row of an iterative solver's trace.

    Args:
        iteration (int): Zero-based iteration counter.
        objective (float): Objective (or envelope) value after the iteration.
        step (float): Accepted step size, or the step gap for fixed-point methods.
        grad_norm (float): Gradient norm, or the residual the method stops on.
        multiplier (float | None): Perspective multiplier for lifted methods.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    iteration: int = Field(..., ge=0)
    objective: float
    step: float
    grad_norm: float
    multiplier: float | None = None


class IterationTrace(BaseModel):
    """
    Ordered iteration records together with the stopping outcome.

    Args:
        records (tuple[IterationRecord, ...]): Rows, oldest first.
        converged (bool): Whether the stopping test was met before the cap.
        stop_reason (str): Short human readable reason for stopping.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    records: tuple[IterationRecord, ...] = ()
    converged: bool = False
    stop_reason: str = ""

    @property
    def objectives(self) -> tuple[float, ...]:
        """Objective column of the trace."""
        return tuple(record.objective for record in self.records)


# ──────────────────────────────── Solvers ────────────────────────────────
class SolveReport(BaseModel):
    """
    Result of a gauge-dual or Lagrange-dual solve with its recovered primal point.

    Args:
        method (str): "gauge_dual" or "lagrange".
        dual_solution (FloatTuple): Final dual iterate.
        dual_value (float): Dual objective at the final iterate.
        primal_solution (FloatTuple): Recovered primal point.
        primal_value (float): kappa(x) + alpha |x| at the primal point.
        duality_product (float | None): primal_value * dual_value; None for the
            Lagrange pairing, which is additive.
        feasibility_residual (float): Constraint violation of the primal point.
        converged (bool): Whether the solver met its stopping test.
        trace (IterationTrace): Per-iteration history.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    method: Literal["gauge_dual", "lagrange"]
    dual_solution: FloatTuple
    dual_value: float
    primal_solution: FloatTuple
    primal_value: float
    duality_product: float | None
    feasibility_residual: float
    converged: bool
    trace: IterationTrace


class AlgorithmReport(BaseModel):
    """
    Result of a projected polar proximal-point or envelope-minimisation run.

    Args:
        algorithm (str): "p4a" or "ema".
        final_point (FloatTuple): Last iterate x.
        envelope_value (float): Projected polar envelope at the last iterate.
        multiplier (float): Perspective multiplier of the last prox step.
        candidate_minimizer (FloatTuple | None): Recovered minimiser of f, or
            None when the multiplier is degenerate.
        candidate_value (float | None): f at the candidate minimiser.
        degenerate (bool): Whether the final multiplier fell below the floor.
        converged (bool): Whether the stopping test was met before the cap.
        trace (IterationTrace): Per-iteration history.
        monotone (bool): Whether the envelope never rose beyond the allowed
            slack along the run.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    algorithm: Literal["p4a", "ema"]
    final_point: FloatTuple
    envelope_value: float
    multiplier: float
    candidate_minimizer: FloatTuple | None
    candidate_value: float | None
    degenerate: bool
    converged: bool
    trace: IterationTrace
    monotone: bool = True


class SolveComparison(BaseModel):
    """
    Gauge-dual and Lagrange-dual reports for one shared instance.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    gauge_dual: SolveReport
    lagrange: SolveReport


class EnvelopeReport(BaseModel):
    """
    Polar envelope evaluation at one point.

    Args:
        value (float): The envelope value.
        prox_point (FloatTuple): The polar proximal point.
        case (ProxCase): Branch that produced the point.
        root_residual (float): Root-equation residual, zero off the root branch.
        gradient (FloatTuple | None): Envelope gradient, or None where the
            envelope vanishes.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    value: float
    prox_point: FloatTuple
    case: ProxCase
    root_residual: float
    gradient: FloatTuple | None


# ──────────────────────────────── Checks ────────────────────────────────
class SampleDeviation(BaseModel):
    """
    Deviation between a sampled quantity and its closed form at one sample.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    sample: FloatTuple
    observed: float
    expected: float
    deviation: float


class PolarIdentityReport(BaseModel):
    """
    Comparison of the sampled polar of a max convolution with the sum of polars.

    Args:
        samples (tuple[SampleDeviation, ...]): Per-sample comparison.
        max_deviation (float): Largest relative deviation.
        threshold (float): Pass threshold on the relative deviation.
        passed (bool): Whether every deviation is within the threshold.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    samples: tuple[SampleDeviation, ...]
    max_deviation: float
    threshold: float
    passed: bool


class LevelSumReport(BaseModel):
    """
    Sampled check of both inclusions of the strict level-set sum property.

    Args:
        checked_sums (int): Sums of strict level-set members tested.
        checked_points (int): Points below the level tested for decomposition.
        failures (tuple[str, ...]): Description of every failing sample.
        passed (bool): Whether no sample failed.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    checked_sums: int
    checked_points: int
    failures: tuple[str, ...]
    passed: bool


class MinkowskiReport(BaseModel):
    """
    Sampled Hausdorff distance between a convolution's unit level set and the
    Minkowski sum of the two unit balls.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    hausdorff: float
    threshold: float
    passed: bool


class CheckResult(BaseModel):
    """
    Outcome of a single named invariant check.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    name: str
    passed: bool
    detail: str = ""


class CheckReport(BaseModel):
    """
    Outcome of an invariant suite.

    Args:
        suite (str): Suite name.
        results (tuple[CheckResult, ...]): Individual checks in run order.
    """

    model_config = ConfigDict(strict=True, frozen=True)

    suite: str
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        """Whether every check in the suite passed."""
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> tuple[str, ...]:
        """Itemised failing checks as `name: detail` strings."""
        return tuple(
            f"{result.name}: {result.detail}"
            for result in self.results
            if not result.passed
        )
