# polar_gauge/config.py

from collections.abc import Mapping

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Tolerances(BaseModel):
    """
    Immutable numeric tolerances shared by the gauge, envelope and perspective code.

    Relative tolerances are scaled by the caller with the natural magnitude of the
    quantity being tested, e.g. the level-set membership tolerance at radius r is
    `feas_rel * (1 + r)`.

    Args:
        feas_rel (float): Level-set membership tolerance factor.
        root_rel (float): Envelope root tolerance factor (bracket width test).
        root_xtol_rel (float): Bisection width actually used, relative to the
            upper bracket. Tighter than `root_rel` so the root residual also meets
            `residual_rel`.
        residual_rel (float): Root-equation residual bound factor, scaled by
            `1 + r**2`.
        root_max_iterations (int): Bisection iteration cap.
        max_bracket_doublings (int): Bracket expansion cap.
        grad_floor_rel (float): Envelope values below `grad_floor_rel * (1 +
            |x| / alpha)` are treated as nondifferentiable.
        dykstra_tol (float): Dykstra stopping factor, scaled by `1 + |x|`.
        dykstra_max_sweeps (int): Dykstra sweep cap.
        lambda_floor (float): Perspective multipliers below this are degenerate.

    Returns:
        Tolerances: Immutable tolerance bundle.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    feas_rel: float = Field(1e-9, gt=0)
    root_rel: float = Field(1e-10, gt=0)
    root_xtol_rel: float = Field(1e-13, gt=0)
    residual_rel: float = Field(1e-9, gt=0)
    root_max_iterations: int = Field(200, gt=0)
    max_bracket_doublings: int = Field(60, gt=0)
    grad_floor_rel: float = Field(1e-8, gt=0)
    dykstra_tol: float = Field(1e-12, gt=0)
    dykstra_max_sweeps: int = Field(10_000, gt=0)
    lambda_floor: float = Field(1e-10, gt=0)

    def with_overrides(self, overrides: Mapping[str, float]) -> "Tolerances":
        """
        Returns a copy with selected tolerances replaced.

        Args:
            overrides (Mapping[str, float]): Field names mapped to new values.

        Returns:
            Tolerances: A validated copy.

        Raises:
            ValueError: If a key is unknown or a value is not positive.
        """
        unknown = set(overrides) - set(type(self).model_fields)
        if unknown:
            raise ValueError(f"unknown tolerance(s): {', '.join(sorted(unknown))}")

        bad = [key for key, value in overrides.items() if not value > 0]
        if bad:
            raise ValueError(f"tolerance override(s) must be positive: {bad}")

        return type(self).model_validate({**self.model_dump(), **overrides})


DEFAULT_TOLERANCES = Tolerances()


class SolverOptions(BaseModel):
    """
    Settings for the gauge-dual projected gradient solver and the Lagrange-dual
    baseline.

    Args:
        max_iterations (int): Iteration cap; zero returns the starting point.
        step_tol (float): Stop once |y_{k+1} - y_k| <= step_tol * (1 + |y_k|).
        feas_rel (float): Gauge-dual runs also require the recovered primal
            point to meet |b - A x| <= feas_rel * (1 + |b|) before stopping.
        armijo_c1 (float): Sufficient-decrease constant.
        backtrack (float): Step shrink factor on a failed Armijo test.
        bb_min (float): Lower safeguard for the Barzilai-Borwein step.
        bb_max (float): Upper safeguard for the Barzilai-Borwein step.
        max_halvings (int): Backtracking cap per iteration.
        accelerated (bool): Use FISTA momentum in the Lagrange baseline.
        log_every (int): Debug-log cadence in iterations.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    max_iterations: int = Field(50_000, ge=0)
    step_tol: float = Field(1e-8, gt=0)
    feas_rel: float = Field(1e-6, gt=0)
    armijo_c1: float = Field(1e-4, gt=0, lt=1)
    backtrack: float = Field(0.5, gt=0, lt=1)
    bb_min: float = Field(1e-8, gt=0)
    bb_max: float = Field(1e8, gt=0)
    max_halvings: int = Field(60, gt=0)
    accelerated: bool = True
    log_every: int = Field(500, gt=0)


class P4AOptions(BaseModel):
    """
    Settings for the projected polar proximal-point iteration.

    Args:
        max_iterations (int): Iteration cap.
        stop_tol (float | None): Step-gap stopping tolerance; None means
            `1e-8 * (1 + |x0|)`.
        monotone_slack (float): Allowed increase of the envelope per iteration,
            relative to `1 + |p(x_k)|`, before the run is flagged non-monotone.
        log_every (int): Debug-log cadence in iterations.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    max_iterations: int = Field(10_000, ge=0)
    stop_tol: float | None = Field(None, gt=0)
    monotone_slack: float = Field(1e-12, ge=0)
    log_every: int = Field(100, gt=0)


class EMAOptions(BaseModel):
    """
    Settings for projected polar envelope minimisation by steepest descent.

    Args:
        max_iterations (int): Iteration cap.
        stop_tol (float | None): Gradient-norm stopping tolerance; None means
            `1e-8 * (1 + |x0|)`.
        armijo_sigma (float): Sufficient-decrease constant in (0, 1).
        beta (float): Constant trial step used when no schedule is supplied.
        beta_min (float): Lower bound every scheduled step is clipped to.
        beta_max (float): Upper bound every scheduled step is clipped to.
        max_halvings (int): Backtracking cap per iteration.
        log_every (int): Debug-log cadence in iterations.
    """

    model_config = ConfigDict(strict=True, frozen=True, extra="forbid")

    max_iterations: int = Field(50_000, ge=0)
    stop_tol: float | None = Field(None, gt=0)
    armijo_sigma: float = Field(0.5, gt=0, lt=1)
    beta: float = Field(1.0, gt=0)
    beta_min: float = Field(1e-8, gt=0)
    beta_max: float = Field(1e8, gt=0)
    max_halvings: int = Field(60, gt=0)
    log_every: int = Field(500, gt=0)

    @model_validator(mode="after")
    def _check_beta_bounds(self) -> "EMAOptions":
        if self.beta_min > self.beta_max:
            raise ValueError("beta_min must not exceed beta_max")
        return self
