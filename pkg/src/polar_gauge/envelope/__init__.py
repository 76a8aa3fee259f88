# envelope/__init__.py

from polar_gauge.schemas import ProxCase

from ._result import EnvelopeGradient, PolarProxResult
from .fast_paths import cone_polar_prox_fast, l2_polar_prox_fast, linf_polar_prox_fast
from .gradient import envelope_polar, polar_envelope_gradient
from .polar_prox import polar_envelope, polar_prox, prox_lipschitz_bound

__all__ = [
    "EnvelopeGradient",
    "PolarProxResult",
    "ProxCase",
    "cone_polar_prox_fast",
    "envelope_polar",
    "l2_polar_prox_fast",
    "linf_polar_prox_fast",
    "polar_envelope",
    "polar_envelope_gradient",
    "polar_prox",
    "prox_lipschitz_bound",
]
