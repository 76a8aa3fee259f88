# perspective/__init__.py

from .algorithms import (
    EMARun,
    EMAState,
    P4ARun,
    P4AState,
    ProjectedProx,
    projected_envelope_gradient,
    projected_polar_envelope,
    run_ema,
    run_p4a,
    scale_minimizer,
)
from .lifted import (
    LiftedFunction,
    lifted_from_descriptor,
    make_shifted_l1,
    make_smoothed_halfspace,
    project_kappa_ball,
)

__all__ = [
    "EMARun",
    "EMAState",
    "LiftedFunction",
    "P4ARun",
    "P4AState",
    "ProjectedProx",
    "lifted_from_descriptor",
    "make_shifted_l1",
    "make_smoothed_halfspace",
    "project_kappa_ball",
    "projected_envelope_gradient",
    "projected_polar_envelope",
    "run_ema",
    "run_p4a",
    "scale_minimizer",
]
