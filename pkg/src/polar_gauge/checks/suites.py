# checks/suites.py

import logging
from collections.abc import Callable
from typing import Literal

import numpy as np

from polar_gauge.config import EMAOptions, P4AOptions, SolverOptions
from polar_gauge.convolution import (
    check_level_sum,
    check_minkowski_sum,
    check_polar_identity,
    unit_directions,
)
from polar_gauge.duality import load_problem, solve_gauge_dual, solve_lagrange_baseline
from polar_gauge.envelope import (
    ProxCase,
    polar_envelope,
    polar_envelope_gradient,
    polar_prox,
    prox_lipschitz_bound,
)
from polar_gauge.errors import InvariantViolation, PolarGaugeError
from polar_gauge.gauges import Gauge, make_cone_indicator, make_norm_gauge, orthant_cone
from polar_gauge.oracle import grid_minimize
from polar_gauge.perspective import (
    make_shifted_l1,
    make_smoothed_halfspace,
    projected_polar_envelope,
    run_ema,
    run_p4a,
    scale_minimizer,
)
from polar_gauge.schemas import CheckReport, CheckResult, GridSpec

logger = logging.getLogger(__name__)

type SuiteName = Literal["envelope", "convolution", "duality", "perspective", "all"]
type Check = Callable[[np.random.Generator], tuple[bool, str]]

DEFAULT_SEED = 42


# ──────────────────────────────── Envelope ────────────────────────────────
def _linf_closed_form(rng: np.random.Generator) -> tuple[bool, str]:
    result = polar_prox(make_norm_gauge("linf", 2), 1.0, [3.0, 1.0])
    offset = float(np.abs(result.prox_point - [1.5, 1.0]).max())
    error = max(abs(result.value - 1.5), offset)
    return error <= 1e-9, f"error {error:.3e}"


def _fast_paths_agree(rng: np.random.Generator) -> tuple[bool, str]:
    worst = 0.0
    for dim in (2, 10, 100):
        for kind, count in (("linf", 1000), ("l2", 100)):
            g = make_norm_gauge(kind, dim)
            for _ in range(count):
                x = rng.normal(size=dim)
                fast = polar_prox(g, 1.0, x)
                generic = polar_prox(g, 1.0, x, use_fast_path=False)
                offset = np.abs(fast.prox_point - generic.prox_point).max()
                worst = max(worst, float(offset))
    return worst <= 1e-8, f"max prox discrepancy {worst:.3e}"


def _cone_indicator_distance(rng: np.random.Generator) -> tuple[bool, str]:
    g = make_cone_indicator(orthant_cone(4))
    alpha, worst = 0.5, 0.0
    for _ in range(100):
        x = rng.normal(size=4)
        projected = np.maximum(x, 0.0)
        result = polar_prox(g, alpha, x)
        expected = float(np.linalg.norm(x - projected)) / alpha
        worst = max(
            worst,
            abs(result.value - expected),
            float(np.abs(result.prox_point - projected).max()),
        )
    return worst <= 1e-12, f"max error {worst:.3e}"


def _root_residuals(rng: np.random.Generator) -> tuple[bool, str]:
    g = make_norm_gauge("l1", 6)
    worst = 0.0
    for _ in range(50):
        result = polar_prox(g, 0.7, rng.normal(size=6))
        if result.case is ProxCase.LEVEL_SET_ROOT:
            worst = max(worst, result.root_residual / (1 + result.value**2))
    return worst <= 1e-9, f"max scaled residual {worst:.3e}"


def _gradient_matches_differences(rng: np.random.Generator) -> tuple[bool, str]:
    lifted = make_shifted_l1(1.0, 3).as_gauge()
    gauges: list[Gauge] = [make_norm_gauge("l2", 3), make_norm_gauge("linf", 3), lifted]
    worst, tested = 0.0, 0
    for g in gauges:
        for _ in range(200):
            x = rng.normal(size=g.dim)
            if g is lifted:
                x[-1] = abs(x[-1]) + 0.5
            gradient = polar_envelope_gradient(g, 1.0, x)
            if gradient.value <= 0.1:
                continue
            estimate = _central_differences(g, 1.0, x)
            error = float(np.linalg.norm(gradient.gradient - estimate))
            worst = max(worst, error / float(np.linalg.norm(gradient.gradient)))
            tested += 1
    return worst <= 1e-5, f"max relative error {worst:.3e} over {tested} points"


def _envelope_lipschitz(rng: np.random.Generator) -> tuple[bool, str]:
    g, alpha = make_norm_gauge("linf", 3), 0.5
    excess = 0.0
    for _ in range(10_000):
        x, y = rng.normal(size=3), rng.normal(size=3)
        gap = abs(polar_envelope(g, alpha, x) - polar_envelope(g, alpha, y))
        bound = float(np.linalg.norm(x - y)) / alpha * (1 + 1e-12) + 1e-12
        excess = max(excess, gap - bound)
    return excess <= 0, f"lipschitz excess {excess:.3e}"


def _homogeneity(rng: np.random.Generator) -> tuple[bool, str]:
    g, alpha = make_norm_gauge("l1", 3), 0.5
    envelope, prox = 0.0, 0.0
    for _ in range(50):
        x = rng.normal(size=3)
        base = polar_prox(g, alpha, x)
        for t in (0.5, 2.0, 10.0):
            scaled = polar_prox(g, alpha, t * x)
            drift = abs(scaled.value - t * base.value) / (t * base.value)
            envelope = max(envelope, drift)
            offset = np.linalg.norm(scaled.prox_point - t * base.prox_point)
            prox = max(prox, float(offset) / (t * (1 + float(np.linalg.norm(x)))))
    passed = envelope <= 1e-9 and prox <= 1e-7
    return passed, f"envelope {envelope:.3e}, prox {prox:.3e}"


def _prox_lipschitz(rng: np.random.Generator) -> tuple[bool, str]:
    g, alpha, radius, floor = make_norm_gauge("l1", 3), 0.5, 3.0, 0.5
    modulus = prox_lipschitz_bound(alpha, radius, floor)
    points = rng.uniform(-radius, radius, size=(2000, 3))
    points = points[np.linalg.norm(points, axis=1) <= radius]
    kept = [x for x in points if polar_envelope(g, alpha, x) >= floor]
    proxes = [polar_prox(g, alpha, x).prox_point for x in kept]
    worst = 0.0
    for i in range(0, len(kept) - 1, 2):
        distance = float(np.linalg.norm(kept[i] - kept[i + 1]))
        moved = float(np.linalg.norm(proxes[i] - proxes[i + 1]))
        worst = max(worst, moved / distance)
    return worst <= modulus, f"largest ratio {worst:.3f} (<= {modulus:.3f})"


def _monotone_in_alpha(rng: np.random.Generator) -> tuple[bool, str]:
    g = make_norm_gauge("linf", 4)
    failures = 0
    for _ in range(20):
        x = rng.normal(size=4)
        values = [polar_envelope(g, alpha, x) for alpha in (1.0, 0.1, 0.01, 0.001)]
        kappa = g.evaluate(x)
        ordered = all(b >= a - 1e-12 for a, b in zip(values, values[1:], strict=False))
        close = abs(values[-1] - kappa) <= 0.01 * (1 + kappa)
        failures += not (ordered and close)
    return failures == 0, f"{failures} point(s) out of order"


def _grid_oracle_agrees(rng: np.random.Generator) -> tuple[bool, str]:
    alpha, worst = 1.0, 0.0
    # euclidean lipschitz constants of the norms on the plane
    for kind, lipschitz in (("l1", np.sqrt(2)), ("l2", 1.0), ("linf", 1.0)):
        g = make_norm_gauge(kind, 2)
        modulus = max(lipschitz, 1 / alpha)
        for _ in range(50):
            x = rng.normal(size=2)
            radius = float(np.linalg.norm(x))
            grid = GridSpec.around(x, radius, points=81, shrink=0.5)

            def objective(z: np.ndarray, x: np.ndarray = x, g: Gauge = g) -> np.ndarray:
                distance = np.linalg.norm(z - x, axis=1) / alpha
                return np.maximum(g.evaluate_many(z), distance)

            found = grid_minimize(objective, grid, vectorized=True).value
            exact = polar_envelope(g, alpha, x)
            worst = max(worst, abs(found - exact) / (modulus * grid.resolution))
    return worst <= 1, f"max deviation {worst:.3f} cells"




# ──────────────────────────────── Convolution ────────────────────────────────
def _polar_identity(rng: np.random.Generator) -> tuple[bool, str]:
    samples = unit_directions(2, 50)
    l2 = make_norm_gauge("l2", 2)
    worst, passed = 0.0, True
    for kind in ("l1", "l2", "linf"):
        report = check_polar_identity(
            make_norm_gauge(kind, 2),
            l2,
            samples,
            directions=360,
        )
        worst = max(worst, report.max_deviation)
        passed = passed and report.passed
    return passed, f"max relative deviation {worst:.3e}"


def _level_sum(rng: np.random.Generator) -> tuple[bool, str]:
    samples = rng.uniform(-0.8, 0.8, size=(10, 2))
    report = check_level_sum(
        make_norm_gauge("l1", 2),
        make_norm_gauge("l2", 2),
        1.0,
        samples,
        sums=50,
        seed=int(rng.integers(2**31)),
    )
    return report.passed, "; ".join(report.failures[:3]) or "ok"


def _minkowski_sum(rng: np.random.Generator) -> tuple[bool, str]:
    report = check_minkowski_sum(
        make_norm_gauge("l1", 2),
        make_norm_gauge("linf", 2),
        directions=360,
    )
    detail = f"hausdorff {report.hausdorff:.3e} (<= {report.threshold:.3e})"
    return report.passed, detail


# ──────────────────────────────── Duality ────────────────────────────────
def _duality_product(rng: np.random.Generator) -> tuple[bool, str]:
    problem = load_problem()
    report = solve_gauge_dual(problem)
    product_error = abs(report.duality_product - 1)
    scale = 1 + float(np.linalg.norm(problem.b))
    feasible = report.feasibility_residual <= 1e-6 * scale
    passed = report.converged and product_error <= 1e-5 and feasible
    return passed, (
        f"duality product error {product_error:.3e}, "
        f"residual {report.feasibility_residual:.3e}"
    )


def _lagrange_agreement(rng: np.random.Generator) -> tuple[bool, str]:
    problem = load_problem(alpha=0.01)
    gauge = solve_gauge_dual(problem)
    lagrange = solve_lagrange_baseline(problem, SolverOptions(step_tol=1e-10))
    distance = float(
        np.linalg.norm(np.subtract(gauge.primal_solution, lagrange.primal_solution)),
    )
    return distance <= 1e-3, f"primal distance {distance:.3e}"


# ──────────────────────────────── Perspective ────────────────────────────────
def _shifted_l1_at_origin(rng: np.random.Generator) -> tuple[bool, str]:
    c, alpha = 2.0, 0.5
    prox = projected_polar_envelope(make_shifted_l1(c, 3), alpha, np.zeros(3))
    error = abs(prox.value - c / (1 + alpha * c))
    return error <= 1e-9, f"error {error:.3e}"


def _p4a_descends(rng: np.random.Generator) -> tuple[bool, str]:
    lf = make_shifted_l1(1.0, 10)
    report = run_p4a(lf, 1.0, rng.normal(size=10)).report
    value = report.candidate_value
    recovered = value is not None and value <= lf.infimum + 1e-4
    return report.monotone and recovered, (
        f"monotone {report.monotone}, candidate value {value}"
    )


def _ema_armijo(rng: np.random.Generator) -> tuple[bool, str]:
    lf = make_shifted_l1(1.0, 10)
    opts = EMAOptions(stop_tol=1e-6)
    run = run_ema(lf, 1.0, rng.normal(size=10), opts)
    sigma = opts.armijo_sigma
    armijo = all(
        state.next_value
        <= state.envelope_value - sigma * state.step * state.gradient_norm**2
        for state in run.states
    )
    value = run.report.candidate_value
    recovered = value is not None and value <= lf.infimum + 1e-4
    passed = run.report.converged and armijo and recovered
    return passed, f"armijo {armijo}, candidate value {value}"


def _vanishing_steps(rng: np.random.Generator) -> tuple[bool, str]:
    stop = 1e-9
    run = run_p4a(
        make_smoothed_halfspace(),
        1.0,
        [2.0, 1.0],
        P4AOptions(max_iterations=200, stop_tol=stop),
    )
    last = run.states[-1].step_gap
    passed = run.report.converged and last <= stop
    return passed, f"step gap {last:.3e} after {len(run.states)} iteration(s)"


def _scaled_minimizer(rng: np.random.Generator) -> tuple[bool, str]:
    lf, alpha = make_smoothed_halfspace(), 1.0
    centre = scale_minimizer(lf, alpha, lf.minimizer)
    best = projected_polar_envelope(lf, alpha, centre).value
    neighbours = centre + 0.05 * unit_directions(2, 8)
    lowest = min(projected_polar_envelope(lf, alpha, x).value for x in neighbours)
    detail = f"p at scaled minimiser {best:.9g}, nearby {lowest:.9g}"
    return best <= lowest + 1e-7, detail


SUITES: dict[str, tuple[tuple[str, Check], ...]] = {
    "envelope": (
        ("linf closed form", _linf_closed_form),
        ("fast paths agree with bisection", _fast_paths_agree),
        ("cone indicator envelope is a scaled distance", _cone_indicator_distance),
        ("root equation residuals", _root_residuals),
        ("gradient matches finite differences", _gradient_matches_differences),
        ("envelope is 1/alpha lipschitz", _envelope_lipschitz),
        ("envelope and prox are homogeneous", _homogeneity),
        ("prox lipschitz on a bounded set", _prox_lipschitz),
        ("monotone in alpha", _monotone_in_alpha),
        ("grid oracle agrees", _grid_oracle_agrees),
    ),
    "convolution": (
        ("polar of convolution is sum of polars", _polar_identity),
        ("strict level sets add", _level_sum),
        ("unit level set is a minkowski sum", _minkowski_sum),
    ),
    "duality": (
        ("gauge dual duality product", _duality_product),
        ("lagrange baseline agrees", _lagrange_agreement),
    ),
    "perspective": (
        ("shifted l1 envelope at origin", _shifted_l1_at_origin),
        ("p4a descends and recovers", _p4a_descends),
        ("ema armijo and recovery", _ema_armijo),
        ("p4a steps vanish", _vanishing_steps),
        ("scaled minimiser minimises envelope", _scaled_minimizer),
    ),
}


def run_suite(suite: SuiteName = "all", *, seed: int = DEFAULT_SEED) -> CheckReport:
    """
    Runs a named invariant suite, or every suite for "all", with a fixed seed.

    A check that raises a package error counts as failed, with the error as
    its detail.

    Args:
        suite (SuiteName): Suite to run.
        seed (int): Seed of the generator shared by the suite's checks.

    Returns:
        CheckReport: Results in run order.

    Raises:
        ValueError: If the suite name is unknown.
    """
    names = tuple(SUITES) if suite == "all" else (suite,)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown check suite: {unknown[0]}")

    rng = np.random.default_rng(seed)
    results = tuple(
        _run_check(name, check, rng)
        for suite_name in names
        for name, check in SUITES[suite_name]
    )
    report = CheckReport(suite=suite, results=results)
    logger.info(
        "Check suite %s: %d of %d passed",
        suite,
        sum(result.passed for result in results),
        len(results),
    )
    return report


def require_passed(report: CheckReport) -> CheckReport:
    """
    Returns the report unchanged when every check passed.

    Raises:
        InvariantViolation: Listing every failing check.
    """
    if not report.passed:
        raise InvariantViolation(report.failures)
    return report


def _run_check(name: str, check: Check, rng: np.random.Generator) -> CheckResult:
    try:
        passed, detail = check(rng)
    except PolarGaugeError as error:
        passed, detail = False, f"{type(error).__name__}: {error}"

    if not passed:
        logger.warning("Check failed: %s (%s)", name, detail)
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def _central_differences(g: Gauge, alpha: float, x: np.ndarray) -> np.ndarray:
    h = 1e-6 * (1 + float(np.linalg.norm(x)))
    steps = np.eye(x.size) * h
    return np.array(
        [
            (polar_envelope(g, alpha, x + step) - polar_envelope(g, alpha, x - step))
            / (2 * h)
            for step in steps
        ],
    )
