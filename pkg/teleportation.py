"""
Average fidelity of continuous-variable teleportation of a coherent state, with the squeezed vacuum,
the one-photon subtracted pure state or the on/on conditioned mixed state as the shared resource.
"""

import math

import numpy as np
from scipy.integrate import dblquad

from constants import QUADRATURE_EPSABS, QUADRATURE_EPSREL, QUADRATURE_HALF_WIDTH
from fock.params import DomainError, ModelParams, ZeroDetectionProbability, check_lambda
from fock.states import pdet_mixed, pdet_pure

# gamma_0 = 0 and gamma_1 = R enter the four terms of the mixed-state results
GAMMA_INDICES = [(0, 0), (0, 1), (1, 0), (1, 1)]


class FidelityResult:
    value: float

    def __init__(self, value: float):
        value = float(value)
        if not -1e-12 <= value <= 1 + 1e-12:
            raise DomainError(f'fidelity {value!r} is outside [0, 1]')
        self.value = min(max(value, 0.0), 1.0)

    def __float__(self):
        return self.value

    def __repr__(self):
        return f'FidelityResult({self.value!r})'


def _gammas(params: ModelParams) -> list[tuple[int, float, float]]:
    """(sign, gamma_i, gamma_j) for the four terms of the on/on sums"""
    gamma = (0.0, params.reflectance)
    return [((-1)**(i + j), gamma[i], gamma[j]) for i, j in GAMMA_INDICES]


def _pure_detection(params: ModelParams) -> float:
    prob = pdet_pure(params)
    if prob <= 0:
        raise ZeroDetectionProbability(f'pure subtracted resource is undefined for {params}')
    return prob


def _mixed_detection(params: ModelParams) -> float:
    prob = pdet_mixed(params)
    if prob <= 0:
        raise ZeroDetectionProbability(f'on/on resource is undefined for {params}')
    return prob


def fid_sq(lambda_: float) -> FidelityResult:
    check_lambda(lambda_)
    return FidelityResult((1 + lambda_) / 2)


def fid_pure(params: ModelParams) -> FidelityResult:
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    prob = _pure_detection(params)
    x = lam * t
    value = (1 - lam**2) * lam**2 * r**2 * (1 - x + x**2 / 2) / (2 * prob * (1 - x)**3)
    return FidelityResult(value)


def fid_limit_t1(lambda_: float) -> FidelityResult:
    """fid_pure as the tap transmittance goes to 1"""
    check_lambda(lambda_)
    return FidelityResult((1 + lambda_)**3 * (1 - lambda_ + lambda_**2 / 2) / (2 * (1 + lambda_**2)))


def _mixed_denominator(lam: float, t: float, gamma_i: float, gamma_j: float) -> float:
    return 1 - lam * t - lam**2 * gamma_i * gamma_j - lam**2 * t / 2 * (gamma_i + gamma_j)


def fid_mixed(params: ModelParams) -> FidelityResult:
    lam, t = params.lambda_, params.transmittance
    prob = _mixed_detection(params)
    total = 0.0
    for sign, gamma_i, gamma_j in _gammas(params):
        total += sign * (1 - lam**2) / (2 * prob * _mixed_denominator(lam, t, gamma_i, gamma_j))
    return FidelityResult(total)


def pure_tlp_generator(mu1: float, mu2: float, q, params: ModelParams):
    """
    g(mu1) g(mu2) with g(mu) = u exp(-(1 - lambda T u) q), u = 1 / (1 - lambda mu).
    Its mixed mu1, mu2 derivative at the origin carries the (x, p) dependence of the pure-resource integrand.
    """
    lam, t = params.lambda_, params.transmittance

    def g(mu):
        u = 1 / (1 - lam * mu)
        return u * np.exp(-(1 - lam * t * u) * q)

    return g(mu1) * g(mu2)


def pure_tlp_generator_derivative(q, params: ModelParams):
    """d^2/dmu1 dmu2 of pure_tlp_generator at mu1 = mu2 = 0"""
    lam, t = params.lambda_, params.transmittance
    first = lam * np.exp(-(1 - lam * t) * q) * (1 + lam * t * q)
    return first**2


def _distance_sq(x, p, alpha0: complex):
    """squared distance of (x, p) from the peak (sqrt2 Re alpha0, sqrt2 Im alpha0)"""
    return (x - math.sqrt(2) * alpha0.real)**2 + (p - math.sqrt(2) * alpha0.imag)**2


def fid_xp_integrand(kind: str, x, p, alpha0: complex, params: ModelParams):
    """
    Probability density of the Bell outcome (x, p) times the fidelity of the corresponding output.
    Integrates to the average fidelity for any coherent amplitude alpha0.
    """
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    d2 = _distance_sq(x, p, complex(alpha0))
    if kind == 'pure':
        prob = _pure_detection(params)
        return r**2 * (1 - lam**2) / (2 * math.pi * prob) * pure_tlp_generator_derivative(d2 / 2, params)
    if kind == 'mixed':
        prob = _mixed_detection(params)
        total = 0.0
        for sign, gamma_i, gamma_j in _gammas(params):
            correlated = 1 - lam**2 * gamma_i * gamma_j
            width = _mixed_denominator(lam, t, gamma_i, gamma_j) / correlated
            total = total + sign * (1 - lam**2) / (2 * math.pi * prob * correlated) * np.exp(-width * d2)
        return total
    raise DomainError(f'unknown teleportation resource "{kind}"')


def fid_quadrature(
    kind: str,
    params: ModelParams,
    alpha0: complex = 0,
    epsabs: float = QUADRATURE_EPSABS,
    epsrel: float = QUADRATURE_EPSREL,
    half_width: float = QUADRATURE_HALF_WIDTH,
) -> float:
    """average fidelity by adaptive 2-D quadrature of fid_xp_integrand over a box around the peak"""
    alpha0 = complex(alpha0)
    x0, p0 = math.sqrt(2) * alpha0.real, math.sqrt(2) * alpha0.imag
    value, _error = dblquad(
        lambda p, x: float(fid_xp_integrand(kind, x, p, alpha0, params)),
        x0 - half_width,
        x0 + half_width,
        p0 - half_width,
        p0 + half_width,
        epsabs=epsabs,
        epsrel=epsrel,
    )
    return value
