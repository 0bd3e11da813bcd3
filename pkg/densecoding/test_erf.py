import math

import numpy as np
import pytest
from scipy import special

from .erf import erf, erf_derivative


def test_reference_values():
    assert erf(0.0) == 0.0
    assert erf(1.0) == pytest.approx(0.842700792949714869, abs=1e-15)
    assert erf(7.0) == 1.0
    assert erf(math.inf) == 1.0
    assert erf(-math.inf) == -1.0


def test_parity():
    x = np.linspace(0, 7, 301)
    np.testing.assert_array_equal(erf(-x), -erf(x))


def test_matches_reference_implementations():
    # dense near the bin edges 0.84375, 1.25, 1/0.35 and 6
    x = np.concatenate([np.linspace(-8, 8, 4001), np.geomspace(1e-12, 1e-6, 50)])
    computed = erf(x)
    np.testing.assert_allclose(computed, [math.erf(v) for v in x], rtol=0, atol=1e-14)
    np.testing.assert_allclose(computed, special.erf(x), rtol=0, atol=1e-14)


def test_shapes_and_nan():
    assert isinstance(erf(0.5), float)
    assert erf(np.zeros((2, 3))).shape == (2, 3)
    assert math.isnan(erf(math.nan))


def test_derivative():
    x = np.linspace(-3, 3, 13)
    h = 1e-5
    np.testing.assert_allclose(erf_derivative(x), (erf(x + h) - erf(x - h)) / (2 * h), atol=1e-9)
