import math

import numpy as np
from scipy.special import gammaln

from .params import DomainError, check_lambda


def log_binomial(n, k):
    """log C(n, k) through log-gamma, finite for n up to several thousand"""
    n = np.asarray(n, dtype=float)
    k = np.asarray(k, dtype=float)
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def schmidt_coeff(lambda_: float, n: int) -> float:
    """alpha_n = sqrt(1 - lambda^2) lambda^n of the two-mode squeezed vacuum"""
    check_lambda(lambda_)
    if n < 0:
        raise DomainError(f'Fock index must be non-negative, got {n}')
    return math.sqrt(1 - lambda_**2) * lambda_**n


def log_bs_magnitude(n, k, transmittance: float):
    """
    log |xi_nk| for the beam splitter amplitude of k out of n photons being reflected.
    Broadcasts over `n` and `k`; callers guarantee 0 <= k <= n.
    """
    n = np.asarray(n, dtype=float)
    k = np.asarray(k, dtype=float)
    reflectance = 1.0 - transmittance
    log_t = math.log(transmittance)
    log_r = math.log(reflectance) if reflectance > 0 else -math.inf
    # 0 * log(0) must stay 0 for the k=0 edge
    with np.errstate(invalid='ignore'):
        t_part = 0.5 * (n - k) * log_t
        r_part = np.where(k > 0, 0.5 * k * log_r, 0.0)
    return 0.5 * log_binomial(n, k) + t_part + r_part


def bs_coeff(n: int, k: int, transmittance: float) -> float:
    """xi_nk = (-1)^k sqrt(C(n, k)) T^((n-k)/2) R^(k/2)"""
    if k < 0 or k > n:
        raise DomainError(f'beam splitter coefficient needs 0 <= k <= n, got n={n}, k={k}')
    if not 0 < transmittance <= 1:
        raise DomainError(f'transmittance must lie in (0, 1], got {transmittance}')
    if k > 0 and transmittance == 1:
        return 0.0
    magnitude = math.exp(float(log_bs_magnitude(n, k, transmittance)))
    return -magnitude if k % 2 else magnitude
