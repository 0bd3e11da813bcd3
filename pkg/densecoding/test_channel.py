import math

import numpy as np
import pytest

from fock.params import DomainError, ModelParams, ZeroDetectionProbability

from .channel import (
    ChannelMatrix4,
    InvalidChannel,
    SignalParams,
    channel_matrix,
    channel_quadrature,
    flip_count,
    homodyne_density,
    mutual_information,
    pure_generators,
)
from .erf import erf

KINDS = ['sq', 'pure', 'mixed']


def test_signal_symbols():
    signal = SignalParams(1.5)
    root = math.sqrt(2) * 1.5
    assert signal.symbols() == [(root, root), (root, -root), (-root, root), (-root, -root)]
    with pytest.raises(DomainError):
        SignalParams(-1)


def test_flip_count():
    assert [flip_count(0, column) for column in range(4)] == [0, 1, 1, 2]
    assert flip_count(3, 0) == 2


def test_mutual_information_limits():
    assert mutual_information(ChannelMatrix4(np.eye(4))) == pytest.approx(2.0)
    assert mutual_information(ChannelMatrix4(np.full((4, 4), 0.25))) == pytest.approx(0.0, abs=1e-15)


def test_mutual_information_bounds():
    rng = np.random.default_rng(11)
    for _ in range(20):
        probs = rng.random((4, 4))
        probs /= probs.sum(axis=1, keepdims=True)
        assert 0 <= mutual_information(ChannelMatrix4(probs)) <= 2


def test_channel_validation():
    with pytest.raises(InvalidChannel):
        ChannelMatrix4(np.full((4, 4), 0.3))
    with pytest.raises(InvalidChannel):
        ChannelMatrix4(np.eye(3))


@pytest.mark.parametrize('kind', KINDS)
def test_channel_limits(kind):
    params = ModelParams(0.5, 0.9)
    np.testing.assert_allclose(channel_matrix(kind, params, SignalParams(40)).probs, np.eye(4), atol=1e-12)
    np.testing.assert_allclose(channel_matrix(kind, params, SignalParams(1e-9)).probs, 0.25, atol=1e-7)


@pytest.mark.parametrize('kind', KINDS)
def test_rows_stochastic(kind):
    for lambda_ in np.linspace(0.05, 0.95, 10):
        for t in (0.7, 0.9):
            for beta in (0.05, 0.7, 1.5, 3.0):
                probs = channel_matrix(kind, ModelParams(lambda_, t), SignalParams(beta)).probs
                np.testing.assert_allclose(probs.sum(axis=1), 1.0, atol=1e-9)
                assert np.all((probs >= 0) & (probs <= 1))


def test_conditional_channels_need_detection():
    with pytest.raises(ZeroDetectionProbability):
        channel_matrix('pure', ModelParams(0, 0.9), SignalParams(1))
    with pytest.raises(ZeroDetectionProbability):
        channel_matrix('mixed', ModelParams(0.5, 1.0), SignalParams(1))


@pytest.mark.parametrize('kind', KINDS)
def test_density_peak_at_symbol(kind):
    params = ModelParams(0.5, 0.9)
    assert homodyne_density(kind, 1.0, -1.0, 1.0, -1.0, params) > homodyne_density(kind, 1.5, -1.0, 1.0, -1.0, params)


@pytest.mark.parametrize('kind', KINDS)
def test_closed_forms_match_quadrature(kind):
    params, signal = ModelParams(0.5, 0.9), SignalParams(1.5)
    np.testing.assert_allclose(channel_matrix(kind, params, signal).probs, channel_quadrature(kind, params, signal).probs, atol=1e-6)


@pytest.mark.slow
@pytest.mark.parametrize('kind', KINDS)
def test_closed_forms_match_quadrature_second_point(kind):
    params, signal = ModelParams(0.3, 0.8), SignalParams(0.7)
    np.testing.assert_allclose(channel_matrix(kind, params, signal).probs, channel_quadrature(kind, params, signal).probs, atol=1e-6)


def test_pure_generators_finite_differences():
    params, beta = ModelParams(0.5, 0.9), 1.5
    x = 0.45
    c = (1 + x) / (1 - x)

    def g(mu):
        e = erf(beta * math.sqrt(c * mu))
        return np.array([(1 + e)**2, 1 - e**2, (1 - e)**2])

    def first(h):
        return (g(1 + h) - g(1 - h)) / (2 * h)

    def second(h):
        return (g(1 + h) - 2 * g(1) + g(1 - h)) / h**2

    h = 1e-3
    gen = pure_generators(params, beta)
    np.testing.assert_allclose(gen.values, g(1), rtol=1e-14)
    np.testing.assert_allclose(gen.first, (4 * first(h / 2) - first(h)) / 3, rtol=1e-7, atol=1e-12)
    np.testing.assert_allclose(gen.second, (4 * second(h / 2) - second(h)) / 3, rtol=1e-7, atol=1e-10)
