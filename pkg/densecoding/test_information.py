import numpy as np
import pytest

from fock.params import ModelParams, ZeroDetectionProbability

from .channel import InvalidChannel, SignalParams, channel_matrix, mixed_weights, mutual_information, normalized_weights, pure_weights
from .information import i_mixed, i_pure, i_sq, information_from_weights


def test_i_sq_limits():
    assert i_sq(0.5, 0) == 0
    assert i_sq(0, 8) == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize('lambda_,beta', [(0, 0.5), (0.3, 1.5), (0.8, 0.7), (0.95, 0.1)])
def test_i_sq_matches_generic_pipeline(lambda_, beta):
    generic = mutual_information(channel_matrix('sq', ModelParams(lambda_), SignalParams(beta)))
    assert i_sq(lambda_, beta) == pytest.approx(generic, abs=1e-10)


@pytest.mark.parametrize('information', [i_pure, i_mixed])
def test_zero_amplitude(information):
    assert information(ModelParams(0.5, 0.9), SignalParams(0)) == pytest.approx(0, abs=1e-15)


@pytest.mark.parametrize('kind,information', [('pure', i_pure), ('mixed', i_mixed)])
def test_matches_generic_pipeline(kind, information):
    params, signal = ModelParams(0.6, 0.9), SignalParams(0.9)
    assert information(params, signal) == pytest.approx(mutual_information(channel_matrix(kind, params, signal)), abs=1e-12)


def test_information_from_weights():
    assert information_from_weights(4, 0, 0) == 2
    assert information_from_weights(1, 1, 1) == 0
    assert information_from_weights(1.5, 1.5, 1.5) == 0
    with pytest.raises(InvalidChannel):
        information_from_weights(0, 0, 0)


@pytest.mark.parametrize('transmittance', [0.7, 0.8, 0.9, 0.99])
def test_zero_amplitude_scan(transmittance):
    for lambda_ in np.linspace(0.01, 0.95, 12):
        params = ModelParams(lambda_, transmittance)
        for information in (i_pure, i_mixed):
            assert 0 <= information(params, SignalParams(0)) <= 1e-12
        assert mutual_information(channel_matrix('mixed', params, SignalParams(0))) <= 1e-12


def test_normalized_weights_sum_to_one():
    i1, i2, i4 = normalized_weights(*mixed_weights(ModelParams(0.01, 0.99), SignalParams(0)))
    assert (i1 + 2 * i2 + i4) / 4 == pytest.approx(1, abs=1e-15)
    assert i1 == pytest.approx(1, abs=1e-15)


def test_pure_needs_detection():
    with pytest.raises(ZeroDetectionProbability):
        i_pure(ModelParams(0, 0.9), SignalParams(1))
    with pytest.raises(ZeroDetectionProbability):
        pure_weights(ModelParams(0.5, 1.0), SignalParams(1))


def test_mixed_approaches_pure():
    params, signal = ModelParams(0.5, 0.9999), SignalParams(1.0)
    assert i_mixed(params, signal) == pytest.approx(i_pure(params, signal), abs=1e-3)


@pytest.mark.parametrize('lambda_', [0.2, 0.5, 0.8])
def test_monotonic_in_beta(lambda_):
    params = ModelParams(lambda_, 0.9)
    betas = np.linspace(0.05, 3.0, 20)
    for values in (
        [i_sq(lambda_, beta) for beta in betas],
        [i_pure(params, SignalParams(beta)) for beta in betas],
        [i_mixed(params, SignalParams(beta)) for beta in betas],
    ):
        assert all(later >= earlier - 1e-14 for earlier, later in zip(values, values[1:]))
        assert all(0 <= value <= 2 + 1e-12 for value in values)
