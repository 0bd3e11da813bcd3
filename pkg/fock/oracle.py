"""
Brute-force reference construction: the squeezed vacuum is split on both beam splitters into an explicit
four-mode amplitude array, and the tapped modes are projected or traced out directly.
Used by the tests and by `psneg selftest` to validate the closed forms and the reduced element sums.
"""

from typing import Optional

import numpy as np

from .coefficients import bs_coeff, schmidt_coeff
from .params import ModelParams, ZeroDetectionProbability

DEFAULT_ORACLE_NMAX = 40


def four_mode_amplitudes(params: ModelParams, nmax: int = DEFAULT_ORACLE_NMAX) -> np.ndarray:
    """psi[a, b, i, j]: amplitude of a photons in A, b in B, i in tap C and j in tap D, for pair numbers n <= nmax"""
    size = nmax + 1
    psi = np.zeros((size, size, size, size))
    t = params.transmittance
    for n in range(size):
        alpha = schmidt_coeff(params.lambda_, n)
        xi = np.array([bs_coeff(n, k, t) for k in range(n + 1)])
        i, j = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing='ij')
        psi[n - i, n - j, i, j] = alpha * np.outer(xi, xi)
    return psi


def povm_detection_probability(params: ModelParams, nmax: int = DEFAULT_ORACLE_NMAX, psi: Optional[np.ndarray] = None) -> float:
    """probability of at least one photon in both tapped modes"""
    if psi is None:
        psi = four_mode_amplitudes(params, nmax)
    return float(np.sum(psi[:, :, 1:, 1:]**2))


def povm_density_elements(params: ModelParams, nmax: int = DEFAULT_ORACLE_NMAX, size: int = 9) -> np.ndarray:
    """rho[m1, m2, n1, n2] of the on/on conditioned state for all indices below `size`"""
    psi = four_mode_amplitudes(params, nmax)
    prob = povm_detection_probability(params, psi=psi)
    if prob <= 0:
        raise ZeroDetectionProbability(f'oracle state at {params} has no on/on events')
    clicked = psi[:size, :size, 1:, 1:]
    return np.einsum('acij,bdij->abcd', clicked, clicked) / prob


def povm_pure_coefficients(params: ModelParams, nmax: int = DEFAULT_ORACLE_NMAX) -> np.ndarray:
    """renormalized diagonal of <1|_C <1|_D psi, the Schmidt vector of the one-photon subtracted state"""
    psi = four_mode_amplitudes(params, nmax)
    projected = np.abs(np.diagonal(psi[:, :, 1, 1]))
    norm = np.linalg.norm(projected)
    if norm == 0:
        raise ZeroDetectionProbability(f'oracle state at {params} has no (1, 1) events')
    return projected / norm
