# envelope/polar_prox.py

import logging
from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import bisect

from polar_gauge._utils import Vector, as_vector, require_positive
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.errors import BracketError, ConvergenceError
from polar_gauge.gauges import Gauge
from polar_gauge.schemas import ProxCase

from ._result import PolarProxResult
from .fast_paths import FAST_PATHS

logger = logging.getLogger(__name__)

type Phi = Callable[[float], float]


def polar_prox(
    g: Gauge,
    alpha: float,
    x: ArrayLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    use_fast_path: bool = True,
) -> PolarProxResult:
    """
    Computes the polar envelope kappa_alpha(x) = inf_z max{kappa(z), |x - z| / alpha}
    and its unique minimiser, the polar proximal point.

    Dispatch order:
        1. x = 0 gives the zero envelope.
        2. A registered closed form for the gauge kind, unless disabled.
        3. The domain projection y = P_dom(x), when kappa(y) < |x - y| / alpha.
        4. The zero envelope, when x already lies in [kappa <= 0].
        5. Otherwise the unique positive root r of
           alpha^2 r^2 = |x - P_[kappa <= r](x)|^2, found by bisection, with
           prox point P_[kappa <= r](x).

    Args:
        g (Gauge): A closed gauge.
        alpha (float): Envelope parameter, positive.
        x (ArrayLike): Input point of length `g.dim`.
        tolerances (Tolerances): Root and feasibility tolerances.
        use_fast_path (bool): Whether closed forms may replace the generic path.

    Returns:
        PolarProxResult: Value, prox point, branch and root diagnostics.

    Raises:
        ValueError: If alpha is not positive or x is malformed.
        BracketError: If no sign change is found for the root equation.
        ConvergenceError: If bisection exhausts its iteration cap.
    """
    weight = require_positive(alpha, "alpha")
    point = as_vector(x, g.dim)

    if not np.any(point):
        return PolarProxResult(0.0, point, ProxCase.ZERO_ENVELOPE)

    fast_path = FAST_PATHS.get(g.kind) if use_fast_path else None
    if fast_path is not None:
        return fast_path(g, weight, point, tolerances)

    if g.has_domain:
        projected = g.project_domain(point)
        gap = float(np.linalg.norm(point - projected)) / weight
        if g.evaluate(projected) < gap - tolerances.feas_rel * (1 + gap):
            return PolarProxResult(gap, projected, ProxCase.DOMAIN_PROJECTION)

    return _solve_level_set_root(g, weight, point, tolerances)


def polar_envelope(
    g: Gauge,
    alpha: float,
    x: ArrayLike,
    *,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """
    Evaluates the polar envelope kappa_alpha(x).

    Args:
        g (Gauge): A closed gauge.
        alpha (float): Envelope parameter, positive.
        x (ArrayLike): Input point.
        tolerances (Tolerances): Passed on to `polar_prox`.

    Returns:
        float: The envelope value.
    """
    return polar_prox(g, alpha, x, tolerances=tolerances).value


def prox_lipschitz_bound(alpha: float, radius: float, floor: float) -> float:
    """
    Lipschitz modulus 3M / (alpha beta) of the polar proximal map of a continuous
    gauge on the set {x : |x| <= M, kappa_alpha(x) >= beta}.

    Args:
        alpha (float): Envelope parameter, positive.
        radius (float): Norm bound M, positive.
        floor (float): Envelope lower bound beta, positive.

    Returns:
        float: The modulus.

    Raises:
        ValueError: If any argument is not positive.
    """
    weight = require_positive(alpha, "alpha")
    bound = require_positive(radius, "radius")
    return 3 * bound / (weight * require_positive(floor, "floor"))


def _solve_level_set_root(
    g: Gauge,
    alpha: float,
    x: Vector,
    tolerances: Tolerances,
) -> PolarProxResult:
    """
    Solves alpha^2 r^2 = |x - P_[kappa <= r](x)|^2 for its unique positive root.
    """

    def phi(radius: float) -> float:
        residual = x - g.project_level_set(x, radius)
        return alpha**2 * radius**2 - float(residual @ residual)

    if phi(0.0) >= 0:
        return PolarProxResult(0.0, x.copy(), ProxCase.ZERO_ENVELOPE)

    start = max(float(np.linalg.norm(x)) / alpha, 1.0)
    upper = _expand_bracket(phi, start, tolerances)

    radius, info = bisect(
        phi,
        0.0,
        upper,
        xtol=tolerances.root_xtol_rel * (1 + upper),
        maxiter=tolerances.root_max_iterations,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise ConvergenceError(
            f"envelope root did not converge in {info.iterations} iterations",
            last_iterate=x,
            residual=abs(phi(radius)),
        )

    residual = abs(phi(radius))
    if residual > tolerances.residual_rel * (1 + radius**2):
        logger.warning(
            "Envelope root residual %.3e exceeds tolerance at radius %.6g",
            residual,
            radius,
        )

    return PolarProxResult(
        float(radius),
        g.project_level_set(x, radius),
        ProxCase.LEVEL_SET_ROOT,
        residual,
        int(info.iterations),
    )


def _expand_bracket(phi: Phi, upper: float, tolerances: Tolerances) -> float:
    """
    Doubles the upper bracket until phi changes sign.
    """
    history = [upper]
    for _ in range(tolerances.max_bracket_doublings):
        if phi(upper) >= 0:
            return upper
        upper *= 2
        history.append(upper)

    raise BracketError(
        f"no sign change below radius {upper:.3e}",
        residual=phi(upper),
        history=history,
    )
