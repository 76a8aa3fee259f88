# envelope/test_gradient.py

import numpy as np
import pytest

from polar_gauge.envelope import (
    envelope_polar,
    polar_envelope,
    polar_envelope_gradient,
)
from polar_gauge.errors import CapabilityError, NondifferentiableError
from polar_gauge.gauges import make_linear_cone_gauge, make_norm_gauge, orthant_cone

pytestmark = pytest.mark.unit


def test_l2_gradient() -> None:
    """
    ARRANGE: l2 norm, alpha = 1
    ACT:     polar_envelope_gradient at (3, 4)
    ASSERT:  gradient is x / (|x| (1 + alpha)) = (0.3, 0.4)
    """
    actual = polar_envelope_gradient(make_norm_gauge("l2", 2), 1.0, [3.0, 4.0])

    assert np.allclose(actual.gradient, [0.3, 0.4])


def test_linf_gradient() -> None:
    """
    ARRANGE: linf norm, alpha = 1
    ACT:     polar_envelope_gradient at (3, 1)
    ASSERT:  gradient is (0.5, 0)
    """
    actual = polar_envelope_gradient(make_norm_gauge("linf", 2), 1.0, [3.0, 1.0])

    assert np.allclose(actual.gradient, [0.5, 0.0], atol=1e-9)


def test_gradient_inner_product_equals_value(rng: np.random.Generator) -> None:
    """
    ARRANGE: l1 norm and a random point
    ACT:     polar_envelope_gradient
    ASSERT:  <x, grad> equals the envelope value
    """
    x = rng.normal(size=4)

    actual = polar_envelope_gradient(make_norm_gauge("l1", 4), 0.5, x)

    assert float(x @ actual.gradient) == pytest.approx(actual.value, rel=1e-8)


def test_gradient_matches_central_differences(rng: np.random.Generator) -> None:
    """
    ARRANGE: l1 norm and a random point
    ACT:     polar_envelope_gradient and central differences
    ASSERT:  they agree to 1e-5
    """
    g = make_norm_gauge("l1", 3)
    x = rng.normal(size=3)
    h = 1e-6
    expected = [
        (polar_envelope(g, 0.5, x + step) - polar_envelope(g, 0.5, x - step)) / (2 * h)
        for step in np.eye(3) * h
    ]

    actual = polar_envelope_gradient(g, 0.5, x).gradient

    assert np.allclose(actual, expected, atol=1e-5)


def test_gradient_inner_product_check_positive() -> None:
    """
    ARRANGE: l2 norm, alpha = 1
    ACT:     polar_envelope_gradient at (3, 4)
    ASSERT:  <x, x - prox> is 12.5
    """
    actual = polar_envelope_gradient(make_norm_gauge("l2", 2), 1.0, [3.0, 4.0])

    assert actual.inner_product_check == pytest.approx(12.5)


def test_gradient_at_origin_raises() -> None:
    """
    ARRANGE: l2 norm
    ACT:     polar_envelope_gradient at the origin
    ASSERT:  raises NondifferentiableError
    """
    with pytest.raises(NondifferentiableError):
        polar_envelope_gradient(make_norm_gauge("l2", 2), 1.0, [0.0, 0.0])


def test_envelope_polar_closed_form() -> None:
    """
    ARRANGE: l2 norm, alpha = 0.5
    ACT:     envelope_polar at (3, 4)
    ASSERT:  returns |y| + alpha |y| = 7.5
    """
    assert envelope_polar(make_norm_gauge("l2", 2), 0.5, [3.0, 4.0]) == 7.5


def test_envelope_polar_l1() -> None:
    """
    ARRANGE: l1 norm, alpha = 1
    ACT:     envelope_polar at (3, 4)
    ASSERT:  returns linf(y) + |y| = 9
    """
    assert envelope_polar(make_norm_gauge("l1", 2), 1.0, [3.0, 4.0]) == 9.0


def test_envelope_polar_without_closed_form_raises() -> None:
    """
    ARRANGE: linear gauge over the orthant
    ACT:     envelope_polar
    ASSERT:  raises CapabilityError
    """
    g = make_linear_cone_gauge([1.0, 1.0], orthant_cone(2))

    with pytest.raises(CapabilityError):
        envelope_polar(g, 1.0, [1.0, 1.0])
