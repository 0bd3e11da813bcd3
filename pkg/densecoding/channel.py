"""
QPSK dense coding over a shared two-mode resource.

The sender displaces one arm by one of four symbols a_kl = ((-1)^k sqrt2 beta, (-1)^l sqrt2 beta), the receiver
performs a Bell measurement and decodes by the quadrant of (x, p). By symmetry P(b_mn | a_kl) depends only
on the number of sign flips between (k, l) and (m, n), so a channel is fixed by three weights I_1, I_2, I_4
with P = I/4 (I_3 = I_2).
"""

import logging
import math

import numpy as np
from scipy.integrate import dblquad

from constants import Case, QUADRATURE_EPSABS, QUADRATURE_EPSREL, QUADRATURE_HALF_WIDTH
from fock.params import DomainError, ModelError, ModelParams, ZeroDetectionProbability
from fock.states import pdet_mixed, pdet_pure

from .erf import erf

ROW_SUM_TOL = 1e-9
GAMMA_INDICES = [(0, 0), (0, 1), (1, 0), (1, 1)]


class InvalidChannel(ModelError):
    pass


class SignalParams:
    """QPSK amplitude beta; symbol index 2k + l with k = 0 for x_s > 0 and l = 0 for p_s > 0"""
    beta: float

    def __init__(self, beta: float):
        # beta = 0 is the degenerate alphabet with all four symbols at the origin
        if not beta >= 0 or not math.isfinite(beta):
            raise DomainError(f'QPSK amplitude must be non-negative and finite, got {beta}')
        self.beta = float(beta)

    def symbols(self) -> list[tuple[float, float]]:
        amplitude = math.sqrt(2) * self.beta
        return [((-1)**k * amplitude, (-1)**l * amplitude) for k in (0, 1) for l in (0, 1)]

    def __repr__(self):
        return f'SignalParams(beta={self.beta!r})'


def flip_count(row: int, column: int) -> int:
    """number of quadrature signs that differ between symbol `row` and decision region `column`"""
    return bin(row ^ column).count('1')


class ChannelMatrix4:
    """probs[a, b] = P(b | a), rows indexed by the sent symbol"""
    probs: np.ndarray

    def __init__(self, probs: np.ndarray):
        probs = np.asarray(probs, dtype=float)
        if probs.shape != (4, 4):
            raise InvalidChannel(f'channel matrix must be 4x4, got {probs.shape}')
        if np.any(probs < -1e-12) or np.any(probs > 1 + 1e-12):
            raise InvalidChannel(f'channel entries must lie in [0, 1]:\n{probs}')
        row_sums = probs.sum(axis=1)
        if np.max(np.abs(row_sums - 1)) > ROW_SUM_TOL:
            raise InvalidChannel(f'channel rows must sum to 1, got {row_sums}')
        self.probs = np.clip(probs, 0.0, 1.0)

    @staticmethod
    def from_weights(i1: float, i2: float, i4: float) -> 'ChannelMatrix4':
        by_flips = np.array([i1, i2, i4]) / 4
        probs = np.array([[by_flips[flip_count(row, column)] for column in range(4)] for row in range(4)])
        return ChannelMatrix4(probs)

    def __repr__(self):
        return f'ChannelMatrix4({self.probs.tolist()})'


def _mixed_detection(params: ModelParams) -> float:
    prob = pdet_mixed(params)
    if prob <= 0:
        raise ZeroDetectionProbability(f'on/on resource is undefined for {params}')
    return prob


def _pure_detection(params: ModelParams) -> float:
    prob = pdet_pure(params)
    if prob <= 0:
        raise ZeroDetectionProbability(f'pure subtracted resource is undefined for {params}')
    return prob


def sq_curvature(lambda_: float) -> float:
    """kappa = (1 + lambda) / (1 - lambda): inverse variance of each quadrature for the squeezed vacuum"""
    return (1 + lambda_) / (1 - lambda_)


def mixed_terms(params: ModelParams) -> list[tuple[int, float, float, float]]:
    """(sign, C_ij, Omega_ij^2, prefactor of the density) for the four Gaussian terms of the on/on resource"""
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    prob = _mixed_detection(params)
    gamma = (0.0, r)
    terms = []
    for i, j in GAMMA_INDICES:
        gi, gj = gamma[i], gamma[j]
        spread = 1 - lam**2 * (t + gi) * (t + gj)
        correlated = (1 - lam * t)**2 - lam**2 * gi * gj
        weight = (1 - lam**2) / (4 * prob * spread)
        prefactor = (1 - lam**2) / (2 * math.pi * prob * correlated)
        terms.append(((-1)**(i + j), weight, spread / correlated, prefactor))
    return terms


def homodyne_density(kind: Case, x, p, xs: float, ps: float, params: ModelParams):
    """probability density of the Bell outcome (x, p) for the symbol (xs, ps)"""
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    d2 = (np.asarray(x) - xs)**2 + (np.asarray(p) - ps)**2
    if kind == 'sq':
        kappa = sq_curvature(lam)
        return kappa / (2 * math.pi) * np.exp(-kappa * d2 / 2)
    if kind == 'pure':
        prob = _pure_detection(params)
        xt = lam * t
        prefactor = (1 - lam**2) * lam**2 * r**2 / (2 * math.pi * prob * (1 - xt)**4)
        return prefactor * (1 - xt * d2 / (2 * (1 - xt)))**2 * np.exp(-(1 + xt) * d2 / (2 * (1 - xt)))
    if kind == 'mixed':
        total = 0.0
        for sign, _weight, omega_sq, prefactor in mixed_terms(params):
            total = total + sign * prefactor * np.exp(-omega_sq * d2 / 2)
        return total
    raise DomainError(f'unknown dense coding resource "{kind}"')


def _quadrant_products(e: float) -> tuple[float, float, float]:
    """(1 + e)^2, 1 - e^2, (1 - e)^2: four times the quadrant masses of a product Gaussian"""
    return (1 + e)**2, 1 - e**2, (1 - e)**2


class PureGenerators:
    """
    g_k(mu) = h_k(e(mu)), e(mu) = erf(beta sqrt(c mu)), c = (1 + x) / (1 - x), x = lambda T,
    with h_1 = (1 + e)^2, h_2 = 1 - e^2, h_4 = (1 - e)^2, and their first two mu derivatives, all at mu = 1.
    """
    values: np.ndarray
    first: np.ndarray
    second: np.ndarray

    def __init__(self, values, first, second):
        self.values = np.asarray(values, dtype=float)
        self.first = np.asarray(first, dtype=float)
        self.second = np.asarray(second, dtype=float)


def pure_generators(params: ModelParams, beta: float, mu: float = 1.0) -> PureGenerators:
    x = params.lambda_ * params.transmittance
    c = (1 + x) / (1 - x)
    e = erf(beta * math.sqrt(c * mu))
    gauss = math.exp(-c * mu * beta**2)
    scale = beta * math.sqrt(c) / math.sqrt(math.pi)
    de = scale * gauss / math.sqrt(mu)
    d2e = scale * gauss * (-c * beta**2 / math.sqrt(mu) - 0.5 * mu**-1.5)
    values = _quadrant_products(e)
    first = (2 * (1 + e) * de, -2 * e * de, -2 * (1 - e) * de)
    second = (
        2 * de**2 + 2 * (1 + e) * d2e,
        -2 * de**2 - 2 * e * d2e,
        2 * de**2 - 2 * (1 - e) * d2e,
    )
    return PureGenerators(values, first, second)


def pure_weights(params: ModelParams, signal: SignalParams) -> tuple[float, float, float]:
    """
    The pure-resource density is a Gaussian in d^2 times (1 - s d^2)^2; the d^2 powers are generated by
    mu derivatives of the width, giving I_k = K [a^2 f'' + 2 a f' + f] with f = g_k / mu at mu = 1.
    """
    _pure_detection(params)
    x = params.lambda_ * params.transmittance
    prefactor = (1 + x)**2 / (1 + x**2)
    a = x / (1 + x)
    gen = pure_generators(params, signal.beta)
    f = gen.values
    df = gen.first - gen.values
    d2f = gen.second - 2 * gen.first + 2 * gen.values
    i1, i2, i4 = prefactor * (a**2 * d2f + 2 * a * df + f)
    return float(i1), float(i2), float(i4)


def mixed_weights(params: ModelParams, signal: SignalParams) -> tuple[float, float, float]:
    totals = np.zeros(3)
    for sign, weight, omega_sq, _prefactor in mixed_terms(params):
        e = erf(math.sqrt(omega_sq) * signal.beta)
        totals += sign * 4 * weight * np.array(_quadrant_products(e))
    return float(totals[0]), float(totals[1]), float(totals[2])


def normalized_weights(i1: float, i2: float, i4: float) -> tuple[float, float, float]:
    """rescale to (I_1 + 2 I_2 + I_4) / 4 = 1; the truncated series meet it only to the tail tolerance"""
    row_sum = (i1 + 2 * i2 + i4) / 4
    if not row_sum > 0 or not math.isfinite(row_sum):
        raise InvalidChannel(f'channel weights have no positive row sum: {(i1, i2, i4)}')
    return i1 / row_sum, i2 / row_sum, i4 / row_sum


def sq_weights(lambda_: float, signal: SignalParams) -> tuple[float, float, float]:
    e = erf(math.sqrt(sq_curvature(lambda_)) * signal.beta)
    return _quadrant_products(e)


def channel_weights(kind: Case, params: ModelParams, signal: SignalParams) -> tuple[float, float, float]:
    if kind == 'sq':
        return sq_weights(params.lambda_, signal)
    if kind == 'pure':
        return normalized_weights(*pure_weights(params, signal))
    if kind == 'mixed':
        return normalized_weights(*mixed_weights(params, signal))
    raise DomainError(f'unknown dense coding resource "{kind}"')


def channel_matrix(kind: Case, params: ModelParams, signal: SignalParams) -> ChannelMatrix4:
    weights = channel_weights(kind, params, signal)
    logging.debug(f'{kind} channel weights at {params}, {signal}: {weights}')
    return ChannelMatrix4.from_weights(*weights)


def _density_width(kind: Case, params: ModelParams) -> float:
    """standard deviation of the slowest Gaussian factor of the density"""
    lam = params.lambda_
    if kind == 'sq':
        return 1 / math.sqrt(sq_curvature(lam))
    if kind == 'pure':
        x = lam * params.transmittance
        return math.sqrt((1 - x) / (1 + x))
    return 1 / math.sqrt(min(omega_sq for _sign, _weight, omega_sq, _prefactor in mixed_terms(params)))


def channel_quadrature(
    kind: Case,
    params: ModelParams,
    signal: SignalParams,
    epsabs: float = QUADRATURE_EPSABS,
    epsrel: float = QUADRATURE_EPSREL,
    half_width: float = QUADRATURE_HALF_WIDTH,
) -> ChannelMatrix4:
    """all 16 entries by adaptive quadrature of homodyne_density over the decision quadrants"""
    extent = math.sqrt(2) * signal.beta + half_width * _density_width(kind, params)
    probs = np.zeros((4, 4))
    for row, (xs, ps) in enumerate(signal.symbols()):
        for column in range(4):
            m, n = divmod(column, 2)
            x_lo, x_hi = (0.0, extent) if m == 0 else (-extent, 0.0)
            p_lo, p_hi = (0.0, extent) if n == 0 else (-extent, 0.0)
            probs[row, column], _error = dblquad(
                lambda p, x: float(homodyne_density(kind, x, p, xs, ps, params)),
                x_lo,
                x_hi,
                p_lo,
                p_hi,
                epsabs=epsabs,
                epsrel=epsrel,
            )
    return ChannelMatrix4(probs)


def mutual_information(channel: ChannelMatrix4) -> float:
    """I(A;B) in bits for equiprobable symbols"""
    prior = np.full(4, 0.25)
    joint = prior[:, None] * channel.probs
    output = joint.sum(axis=0)
    nonzero = joint > 0
    ratio = channel.probs[nonzero] / np.broadcast_to(output, joint.shape)[nonzero]
    return float(np.clip(np.sum(joint[nonzero] * np.log2(ratio)), 0.0, 2.0))
