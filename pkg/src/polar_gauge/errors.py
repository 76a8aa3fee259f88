# polar_gauge/errors.py

from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray


class PolarGaugeError(Exception):
    """
    Base class for every error raised by the polar_gauge package.
    """


class CapabilityError(PolarGaugeError):
    """
    Raised when an operation is not available for the given gauge or dimension,
    e.g. a Moreau prox for a gauge without a closed form, or a grid oracle
    above three dimensions.
    """


class ConvergenceError(PolarGaugeError):
    """
    Raised when an iterative routine stops without meeting its tolerance.

    Args:
        message (str): Human readable description.
        last_iterate (NDArray | None): Final iterate reached before stopping.
        residual (float): Residual of the stopping test at the last iterate.
        history (Sequence[float]): Residual (or bracket) history, oldest first.
    """

    def __init__(
        self,
        message: str,
        *,
        last_iterate: NDArray[np.float64] | None = None,
        residual: float = float("nan"),
        history: Sequence[float] = (),
    ) -> None:
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual = residual
        self.history = tuple(history)


class BracketError(ConvergenceError):
    """
    Raised when a root bracket cannot be expanded to enclose a sign change.
    """


class LineSearchError(ConvergenceError):
    """
    Raised when backtracking exhausts its halvings without sufficient decrease.
    """


class NondifferentiableError(PolarGaugeError):
    """
    Raised when a gradient is requested where the polar envelope is (numerically)
    zero, i.e. at a point where it need not be differentiable.

    Args:
        message (str): Human readable description.
        value (float): Envelope value at the offending point.
    """

    def __init__(self, message: str, *, value: float) -> None:
        super().__init__(message)
        self.value = value


class NoFeasiblePointError(PolarGaugeError):
    """
    Raised when a grid projection finds no member of the target set.
    """


class RecoveryError(PolarGaugeError):
    """
    Raised when a primal point cannot be recovered from a dual solution.
    """


class InvariantViolation(PolarGaugeError):
    """
    Raised when one or more invariant checks fail.

    Args:
        failures (Sequence[str]): Names and details of the failing checks.
    """

    def __init__(self, failures: Sequence[str]) -> None:
        super().__init__("; ".join(failures) or "invariant violated")
        self.failures = tuple(failures)
