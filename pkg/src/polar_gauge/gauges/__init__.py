# gauges/__init__.py

from .base import Gauge
from .catalog import (
    gauge_from_descriptor,
    make_null_gauge,
    make_zero_indicator,
    scale_gauge,
)
from .cones import (
    ConeSpec,
    dykstra_project,
    halfspace_cone,
    make_cone_indicator,
    make_linear_cone_gauge,
    orthant_cone,
)
from .norms import make_norm_gauge, project_l1_ball, project_weighted_l1_ball
from .polar import polar_eval_oracle
from .prox import moreau_envelope, moreau_prox

__all__ = [
    # base
    "Gauge",
    # catalog
    "gauge_from_descriptor",
    "make_null_gauge",
    "make_zero_indicator",
    "scale_gauge",
    # cones
    "ConeSpec",
    "dykstra_project",
    "halfspace_cone",
    "make_cone_indicator",
    "make_linear_cone_gauge",
    "orthant_cone",
    # norms
    "make_norm_gauge",
    "project_l1_ball",
    "project_weighted_l1_ball",
    # oracles
    "polar_eval_oracle",
    # prox
    "moreau_envelope",
    "moreau_prox",
]
