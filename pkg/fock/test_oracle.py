import itertools

import numpy as np
import pytest

from .oracle import povm_density_elements, povm_detection_probability, povm_pure_coefficients
from .params import ModelParams
from .states import mixed_density_elements, pdet_mixed, pure_subtracted_state

ORACLE_POINTS = list(itertools.product([0.2, 0.5, 0.7], [0.8, 0.9]))


@pytest.mark.parametrize('lambda_,t', ORACLE_POINTS)
def test_detection_probability_matches_oracle(lambda_, t):
    params = ModelParams(lambda_, t)
    assert pdet_mixed(params) == pytest.approx(povm_detection_probability(params), rel=1e-10)


@pytest.mark.parametrize('lambda_,t', ORACLE_POINTS)
def test_density_elements_match_oracle(lambda_, t):
    params = ModelParams(lambda_, t)
    size = 9
    expected = povm_density_elements(params, size=size)
    m1, m2, n1, n2 = np.meshgrid(*(np.arange(size),) * 4, indexing='ij')
    allowed = m1 - n1 == m2 - n2
    computed = mixed_density_elements(m1[allowed], m2[allowed], (m1 - n1)[allowed], params)
    np.testing.assert_allclose(computed, expected[allowed], rtol=1e-10, atol=0)
    # elements off the selection rule vanish in the oracle as well
    assert np.all(expected[~allowed] == 0)


def test_vacuum_element_matches_oracle():
    params = ModelParams(0.5, 0.9)
    expected = povm_density_elements(params, size=1)[0, 0, 0, 0]
    assert float(mixed_density_elements(0, 0, 0, params)) == pytest.approx(expected, rel=1e-10)


def test_pure_state_matches_projection():
    params = ModelParams(0.5, 0.9)
    state = pure_subtracted_state(params)
    projected = povm_pure_coefficients(params)
    np.testing.assert_allclose(state.coeffs[:30], projected[:30], rtol=1e-10, atol=1e-15)
