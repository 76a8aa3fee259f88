# duality/instances.py

import logging
from importlib.resources import files
from pathlib import Path
from typing import NamedTuple

import numpy as np

from polar_gauge._utils import Vector
from polar_gauge.config import DEFAULT_TOLERANCES, Tolerances
from polar_gauge.gauges import (
    gauge_from_descriptor,
    make_norm_gauge,
    make_zero_indicator,
)
from polar_gauge.schemas import ProblemDescriptor

from .problem import GaugeDualProblem

logger = logging.getLogger(__name__)

BUNDLED_INSTANCE = "bp_instance_5x12.json"


class SparseInstance(NamedTuple):
    """
    A basis pursuit problem and the sparse signal its right-hand side was built
    from.
    """

    problem: GaugeDualProblem
    generator: Vector


def make_sparse_instance(
    m: int,
    n: int,
    sparsity: int,
    seed: int = 42,
    *,
    alpha: float = 0.1,
) -> SparseInstance:
    """
    Builds a seeded basis pursuit instance: Gaussian A scaled by 1/sqrt(m), a
    generator with `sparsity` standard normal entries at random positions and
    b = A x0, with kappa = l1 and rho the origin indicator.

    Args:
        m (int): Number of measurements.
        n (int): Signal length.
        sparsity (int): Nonzeros in the generator, between 1 and n.
        seed (int): Random seed.
        alpha (float): Regularisation weight.

    Returns:
        SparseInstance: The problem and its generator.

    Raises:
        ValueError: If the sizes are inconsistent.
    """
    if m < 1 or n < 1 or not 1 <= sparsity <= n:
        raise ValueError(f"invalid instance sizes m={m}, n={n}, sparsity={sparsity}")

    rng = np.random.default_rng(seed)
    matrix = rng.standard_normal((m, n)) / np.sqrt(m)
    generator = np.zeros(n)
    support = rng.choice(n, size=sparsity, replace=False)
    generator[support] = rng.standard_normal(sparsity)

    problem = GaugeDualProblem(
        kappa=make_norm_gauge("l1", n),
        rho=make_zero_indicator(m),
        A=matrix,
        b=matrix @ generator,
        alpha=alpha,
    )
    return SparseInstance(problem, generator)


def problem_from_descriptor(
    descriptor: ProblemDescriptor,
    *,
    alpha: float | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> GaugeDualProblem:
    """
    Builds a GaugeDualProblem from a validated instance descriptor.

    Args:
        descriptor (ProblemDescriptor): The instance.
        alpha (float | None): Overrides the descriptor's alpha when given.
        tolerances (Tolerances): Tolerances for the catalog gauges.

    Returns:
        GaugeDualProblem: The problem.
    """
    return GaugeDualProblem(
        kappa=gauge_from_descriptor(descriptor.kappa, tolerances=tolerances),
        rho=gauge_from_descriptor(descriptor.rho, tolerances=tolerances),
        A=np.array(descriptor.A),
        b=np.array(descriptor.b),
        sigma=descriptor.sigma,
        alpha=descriptor.alpha if alpha is None else alpha,
    )


def load_descriptor(path: Path | None = None) -> ProblemDescriptor:
    """
    Reads an instance file, or the bundled 5 x 12 instance when no path is given.

    Args:
        path (Path | None): JSON instance file.

    Returns:
        ProblemDescriptor: The validated instance.

    Raises:
        pydantic.ValidationError: If the file is not valid JSON or does not match
            the instance schema; JSON errors report line and column.
    """
    if path is None:
        payload = files("polar_gauge.duality").joinpath("data", BUNDLED_INSTANCE)
        text = payload.read_text(encoding="utf-8")
    else:
        text = path.read_text(encoding="utf-8")

    logger.debug("Loading problem instance from %s", path or BUNDLED_INSTANCE)
    return ProblemDescriptor.model_validate_json(text)


def load_problem(
    path: Path | None = None,
    *,
    alpha: float | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> GaugeDualProblem:
    """
    Reads an instance file and builds the problem.

    Args:
        path (Path | None): JSON instance file; None for the bundled instance.
        alpha (float | None): Overrides the file's alpha when given.
        tolerances (Tolerances): Tolerances for the catalog gauges.

    Returns:
        GaugeDualProblem: The problem.
    """
    return problem_from_descriptor(
        load_descriptor(path),
        alpha=alpha,
        tolerances=tolerances,
    )
