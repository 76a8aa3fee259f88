# convolution/__init__.py

from .checks import check_level_sum, check_minkowski_sum, check_polar_identity
from .max_convolve import (
    ConvolutionWitness,
    convolution_grid,
    max_convolve,
    sample_convolution_level_set,
    sample_unit_level_set,
    unit_directions,
)

__all__ = [
    "ConvolutionWitness",
    "check_level_sum",
    "check_minkowski_sum",
    "check_polar_identity",
    "convolution_grid",
    "max_convolve",
    "sample_convolution_level_set",
    "sample_unit_level_set",
    "unit_directions",
]
