# unit/test_config.py

import pytest
from pydantic import ValidationError

from polar_gauge.config import (
    DEFAULT_TOLERANCES,
    EMAOptions,
    P4AOptions,
    SolverOptions,
    Tolerances,
)

pytestmark = pytest.mark.unit


def test_with_overrides_replaces_value() -> None:
    """
    ARRANGE: default tolerances
    ACT:     with_overrides for feas_rel
    ASSERT:  copy carries the new value
    """
    actual = DEFAULT_TOLERANCES.with_overrides({"feas_rel": 1e-6})

    assert actual.feas_rel == 1e-6


def test_with_overrides_leaves_original_unchanged() -> None:
    """
    ARRANGE: default tolerances
    ACT:     with_overrides for feas_rel
    ASSERT:  the original keeps its default
    """
    DEFAULT_TOLERANCES.with_overrides({"feas_rel": 1e-6})

    assert DEFAULT_TOLERANCES.feas_rel == 1e-9


def test_with_overrides_rejects_unknown_key() -> None:
    """
    ARRANGE: an override for a field that does not exist
    ACT:     with_overrides
    ASSERT:  raises ValueError naming the key
    """
    with pytest.raises(ValueError, match="bogus"):
        DEFAULT_TOLERANCES.with_overrides({"bogus": 1.0})


def test_with_overrides_rejects_non_positive_value() -> None:
    """
    ARRANGE: a zero override
    ACT:     with_overrides
    ASSERT:  raises ValueError
    """
    with pytest.raises(ValueError):
        DEFAULT_TOLERANCES.with_overrides({"root_rel": 0.0})


def test_with_overrides_empty_mapping_is_equal_copy() -> None:
    """
    ARRANGE: an empty override mapping
    ACT:     with_overrides
    ASSERT:  result equals the defaults
    """
    actual = DEFAULT_TOLERANCES.with_overrides({})

    assert actual == DEFAULT_TOLERANCES


def test_tolerances_reject_zero_field() -> None:
    """
    ARRANGE: feas_rel of zero
    ACT:     construct Tolerances
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        Tolerances(feas_rel=0.0)


def test_tolerances_are_frozen() -> None:
    """
    ARRANGE: default tolerances
    ACT:     assign a field
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        DEFAULT_TOLERANCES.feas_rel = 1.0


def test_solver_options_reject_unknown_field() -> None:
    """
    ARRANGE: an unrecognised solver setting
    ACT:     construct SolverOptions
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        SolverOptions(momentum=0.9)


def test_solver_options_reject_backtrack_of_one() -> None:
    """
    ARRANGE: backtrack factor of one
    ACT:     construct SolverOptions
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        SolverOptions(backtrack=1.0)


def test_p4a_options_default_stop_tol_is_none() -> None:
    """
    ARRANGE: no arguments
    ACT:     construct P4AOptions
    ASSERT:  stop_tol defaults to None (scaled by the start point at run time)
    """
    actual = P4AOptions()

    assert actual.stop_tol is None


def test_ema_options_reject_sigma_of_one() -> None:
    """
    ARRANGE: Armijo constant of one
    ACT:     construct EMAOptions
    ASSERT:  raises ValidationError
    """
    with pytest.raises(ValidationError):
        EMAOptions(armijo_sigma=1.0)


def test_ema_options_allow_zero_iterations() -> None:
    """
    ARRANGE: iteration cap of zero
    ACT:     construct EMAOptions
    ASSERT:  cap is stored
    """
    actual = EMAOptions(max_iterations=0)

    assert actual.max_iterations == 0
