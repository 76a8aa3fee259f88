# polar_gauge/__init__.py

from .config import DEFAULT_TOLERANCES, Tolerances
from .envelope import (
    envelope_polar,
    polar_envelope,
    polar_envelope_gradient,
    polar_prox,
)
from .duality import GaugeDualProblem, solve_gauge_dual, solve_lagrange_baseline
from .gauges import Gauge, gauge_from_descriptor, make_norm_gauge
from .perspective import (
    make_shifted_l1,
    make_smoothed_halfspace,
    projected_polar_envelope,
    run_ema,
    run_p4a,
)

__all__ = [
    "DEFAULT_TOLERANCES",
    "Gauge",
    "GaugeDualProblem",
    "Tolerances",
    "envelope_polar",
    "gauge_from_descriptor",
    "make_norm_gauge",
    "make_shifted_l1",
    "make_smoothed_halfspace",
    "polar_envelope",
    "polar_envelope_gradient",
    "polar_prox",
    "projected_polar_envelope",
    "run_ema",
    "run_p4a",
    "solve_gauge_dual",
    "solve_lagrange_baseline",
]
