# schemas/__init__.py

from .descriptors import (
    GaugeDescriptor,
    LiftedDescriptor,
    ProblemDescriptor,
    RunConfig,
)
from .grid import GridSpec
from .reports import (
    AlgorithmReport,
    CheckReport,
    CheckResult,
    EnvelopeReport,
    IterationRecord,
    IterationTrace,
    LevelSumReport,
    MinkowskiReport,
    PolarIdentityReport,
    ProxCase,
    SampleDeviation,
    SolveComparison,
    SolveReport,
)

__all__ = [
    # descriptors
    "GaugeDescriptor",
    "LiftedDescriptor",
    "ProblemDescriptor",
    "RunConfig",
    # grids
    "GridSpec",
    # reports
    "AlgorithmReport",
    "CheckReport",
    "CheckResult",
    "EnvelopeReport",
    "IterationRecord",
    "IterationTrace",
    "LevelSumReport",
    "MinkowskiReport",
    "PolarIdentityReport",
    "ProxCase",
    "SampleDeviation",
    "SolveComparison",
    "SolveReport",
]
