import logging
import math
from typing import Optional

import numpy as np
from scipy.special import gammaln, logsumexp

from constants import DEFAULT_MAX_TERMS, DEFAULT_TAIL_REL_TOL

from .params import DensityElementKey, ModelParams, SchmidtState, ZeroDetectionProbability, check_lambda

# number of i-terms evaluated per pass of the element kernel
TERM_CHUNK = 32


def pdet_pure(params: ModelParams) -> float:
    """probability of exactly one photon in each tapped mode"""
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    x = lam * t
    return (1 - lam**2) * lam**2 * r**2 * (1 + x**2) / (1 - x**2)**3


def pdet_mixed(params: ModelParams) -> float:
    """probability of an on/on click in the tapped modes"""
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    return lam**2 * r**2 * (1 + lam**2 * t) / ((1 - lam**2 * t) * (1 - lam**2 * t**2))


def _require_detection(probability: float, params: ModelParams, what: str) -> float:
    if probability <= 0:
        raise ZeroDetectionProbability(f'{what} is undefined for {params}: detection probability is zero')
    return probability


def mean_photon_sq(lambda_: float) -> float:
    check_lambda(lambda_)
    return 2 * lambda_**2 / (1 - lambda_**2)


def mean_photon_mixed(params: ModelParams) -> float:
    lam, t = params.lambda_, params.transmittance
    if lam == 0:
        raise ZeroDetectionProbability('mean photon number of the on/on state needs lambda > 0')
    prob = _require_detection(pdet_mixed(params), params, 'mean photon number')
    l2 = lam**2
    bracket = (l2 * t / (1 - l2)**2 - l2 * t / (1 - l2 * t)**2 - l2 * t**2 / (1 - l2 * t)**2 + l2 * t**2 / (1 - l2 * t**2)**2)
    return 2 * (1 - l2) / prob * bracket


def mean_photon_pure(params: ModelParams) -> float:
    coeffs = pure_subtracted_state(params).coeffs
    return float(2 * np.sum(np.arange(len(coeffs)) * coeffs**2))


def _tail_length(weights: np.ndarray, minimum: int, tol: float) -> Optional[int]:
    """smallest n >= minimum with sum(weights[n:]) <= tol, None if the vector is too short"""
    # tails are summed from the end so they stay accurate below round-off of the total
    tails = np.cumsum(weights[::-1])[::-1]
    candidates = np.flatnonzero(tails[minimum:] <= tol)
    if not candidates.size:
        return None
    return minimum + int(candidates[0])


def sv_state(lambda_: float, kmax: int, tail_rel_tol: float = DEFAULT_TAIL_REL_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> SchmidtState:
    """Schmidt vector alpha_n of the two-mode squeezed vacuum, extended past kmax until the dropped tail is below tail_rel_tol"""
    check_lambda(lambda_)
    length = kmax + 1
    if lambda_ > 0:
        # sum_{k >= N} alpha_k^2 = lambda^(2N)
        length = max(length, math.ceil(math.log(tail_rel_tol) / (2 * math.log(lambda_))))
    if length > max_terms:
        logging.warning(f'squeezed vacuum at lambda={lambda_} needs {length} coefficients, truncating to {max_terms}')
        length = max_terms
    n = np.arange(length)
    coeffs = math.sqrt(1 - lambda_**2) * lambda_**n
    return SchmidtState(coeffs)


def pure_subtracted_state(params: ModelParams) -> SchmidtState:
    """
    Schmidt vector of the state conditioned on exactly one photon in each tapped mode:
    c_n = alpha_{n+1} xi_{n+1,1}^2 / sqrt(P_det), i.e. c_n proportional to (n+1) (lambda T)^n.
    At least kmax+1 coefficients are kept, more if needed to bring the dropped weight below tail_rel_tol.
    """
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    if lam * r == 0:
        raise ZeroDetectionProbability(f'one-photon subtraction needs lambda * R > 0, got {params}')
    prob = pdet_pure(params)
    n = np.arange(max(params.max_terms, params.kmax + 1))
    # alpha_{n+1} xi_{n+1,1}^2 = sqrt(1 - lambda^2) lambda^(n+1) (n+1) T^n R
    log_c = 0.5 * math.log(1 - lam**2) + (n + 1) * math.log(lam) + np.log(n + 1) + n * math.log(t) + math.log(r) - 0.5 * math.log(prob)
    coeffs = np.exp(log_c)
    length = _tail_length(coeffs**2, params.kmax + 1, params.tail_rel_tol)
    if length is None:
        logging.warning(f'pure subtracted state at {params} did not reach tail tolerance within {len(coeffs)} coefficients')
        return SchmidtState(coeffs)
    logging.debug(f'pure subtracted state at {params}: {length} coefficients')
    return SchmidtState(coeffs[:length], tail_rel_tol=params.tail_rel_tol)


def _log_factorials(size: int) -> np.ndarray:
    return gammaln(np.arange(size, dtype=float) + 1)


def mixed_density_elements(m1, m2, d, params: ModelParams) -> np.ndarray:
    """
    Vectorised rho_{m1 m2 n1 n2} of the on/on conditioned state with n1 = m1 - d and n2 = m2 - d.

    The detector photon numbers are tied by j = i + d, leaving the single sum
        sum_{i >= max(1, 1 - d)} alpha_{m1+i} alpha_{m2+i} xi_{m1+i,i} xi_{m1+i,j} xi_{m2+i,i} xi_{m2+i,j}
    whose terms are all non-negative. Terms are accumulated in log space, chunk by chunk, until the
    latest term falls below tail_rel_tol times the running sum, capped at max_terms terms.
    Callers guarantee d <= min(m1, m2).
    """
    lam, t, r = params.lambda_, params.transmittance, params.reflectance
    prob = _require_detection(pdet_mixed(params), params, 'on/on density element')
    m1, m2, d = np.broadcast_arrays(*(np.asarray(v, dtype=np.int64) for v in (m1, m2, d)))
    start = np.maximum(1, 1 - d)
    lf = _log_factorials(int(np.max(np.maximum(m1, m2) + start, initial=1)) + params.max_terms + 1)
    log_lam, log_t, log_r = math.log(lam), math.log(t), math.log(r)
    # i-independent part of the log term
    base = (math.log(1 - lam**2) + (m1 + m2) * log_lam - 0.5 * (lf[m1] + lf[m1 - d] + lf[m2] + lf[m2 - d]) + (m1 + m2 - d) * log_t + d * log_r)
    log_tol = math.log(params.tail_rel_tol)
    acc = np.full(m1.shape, -np.inf)
    done = np.zeros(m1.shape, dtype=bool)
    offset = 0
    while offset < params.max_terms and not done.all():
        steps = np.arange(offset, min(offset + TERM_CHUNK, params.max_terms))
        i = start[..., None] + steps
        j = i + d[..., None]
        terms = (base[..., None] + 2 * i * (log_lam + log_r) + lf[m1[..., None] + i] + lf[m2[..., None] + i] - lf[i] - lf[j])
        running = np.logaddexp(acc[..., None], np.logaddexp.accumulate(terms, axis=-1))
        converged = np.any(terms < log_tol + running, axis=-1)
        acc = np.where(done, acc, np.logaddexp(acc, logsumexp(terms, axis=-1)))
        done |= converged
        offset += len(steps)
    if not done.all():
        logging.warning(f'{int(np.sum(~done))} density elements hit the {params.max_terms}-term cap at {params}')
    return np.exp(acc - math.log(prob))


def mixed_density_element(key: DensityElementKey, params: ModelParams) -> float:
    """rho_{m1 m2 n1 n2} of the on/on conditioned state; exactly 0 off the m1 - n1 = m2 - n2 selection rule"""
    if not key.allowed():
        return 0.0
    d = key.m1 - key.n1
    return float(mixed_density_elements(key.m1, key.m2, d, params))
