"""
Cyclic Jacobi eigensolver for the real symmetric partial-transpose blocks.

Pairs are swept in round-robin order: each round holds n/2 disjoint (k, l) pairs, so a whole round
of plane rotations is applied at once with vectorised row and column updates.
"""

import logging

import numpy as np

from constants import JACOBI_MAX_SWEEPS, JACOBI_TOL, SYMMETRY_TOL
from fock.params import DomainError, ModelError


class NonSymmetric(ModelError):
    pass


class NoConvergence(ModelError):
    pass


def round_robin_pairs(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """n-1 (or n, for odd n) rounds of disjoint index pairs with k < l, covering every pair exactly once"""
    players = list(range(n + n % 2))
    dummy = n if n % 2 else None
    rounds = []
    for _ in range(len(players) - 1):
        half = len(players) // 2
        pairs = [(p, q) for p, q in zip(players[:half], reversed(players[half:])) if dummy not in (p, q)]
        if pairs:
            k, l = np.array(pairs).T
            rounds.append((np.minimum(k, l), np.maximum(k, l)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def check_symmetric(matrix: np.ndarray, symmetry_tol: float = SYMMETRY_TOL) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DomainError(f'expected a square matrix, got shape {matrix.shape}')
    if not np.all(np.isfinite(matrix)):
        raise DomainError('matrix has non-finite entries')
    asymmetry = float(np.max(np.abs(matrix - matrix.T), initial=0))
    if asymmetry > symmetry_tol:
        raise NonSymmetric(f'matrix is not symmetric: max |A - A^T| = {asymmetry:.3e} > {symmetry_tol:.1e}')
    return matrix


def _rotation_tangents(a: np.ndarray, k: np.ndarray, l: np.ndarray, threshold: float) -> np.ndarray:
    """tan of the angle annihilating a[k, l]; zero where the element is already below the threshold"""
    a_kl = a[k, l]
    diff = a[l, l] - a[k, k]
    active = np.abs(a_kl) > threshold
    t = np.zeros_like(a_kl)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        phi = diff / (2.0 * a_kl)
        rotated = np.sign(phi) / (np.abs(phi) + np.sqrt(phi**2 + 1.0))
        # phi = 0 means equal diagonal entries: rotate by 45 degrees
        rotated = np.where(phi == 0, 1.0, rotated)
        # huge |phi| squares to inf; the angle is then a_kl / diff
        rotated = np.where(np.isfinite(phi**2), rotated, a_kl / diff)
    t[active] = rotated[active]
    return t


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """
    Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, in ascending order.
    Converged once the off-diagonal Frobenius norm is at most `tol` times the Frobenius norm of the input.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    if n < 2 or scale == 0:
        return np.sort(np.diag(a))
    target = tol * scale
    # elements below this cannot keep the off-diagonal norm above target on their own
    threshold = target / n
    rounds = round_robin_pairs(n)
    for sweep in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= target:
            logging.debug(f'jacobi: {n}x{n} converged after {sweep} sweeps, off-diagonal norm {off:.3e}')
            return np.sort(np.diag(a))
        for k, l in rounds:
            t = _rotation_tangents(a, k, l, threshold)
            if not t.any():
                continue
            c = 1.0 / np.sqrt(t**2 + 1.0)
            s = t * c
            rows_k, rows_l = a[k, :].copy(), a[l, :].copy()
            a[k, :] = c[:, None] * rows_k - s[:, None] * rows_l
            a[l, :] = s[:, None] * rows_k + c[:, None] * rows_l
            cols_k, cols_l = a[:, k].copy(), a[:, l].copy()
            a[:, k] = cols_k * c - cols_l * s
            a[:, l] = cols_k * s + cols_l * c
            rotated = t != 0
            a[k[rotated], l[rotated]] = 0.0
            a[l[rotated], k[rotated]] = 0.0
    off = float(np.linalg.norm(a - np.diag(np.diag(a))))
    if off <= target:
        return np.sort(np.diag(a))
    raise NoConvergence(f'jacobi: {n}x{n} matrix not converged after {max_sweeps} sweeps (off-diagonal norm {off:.3e}, target {target:.3e})')


def symmetric_eigenvalues(
    matrix: np.ndarray,
    method: str = 'jacobi',
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
    symmetry_tol: float = SYMMETRY_TOL,
) -> np.ndarray:
    matrix = check_symmetric(matrix, symmetry_tol)
    if method == 'jacobi':
        return jacobi_eigenvalues(matrix, tol=tol, max_sweeps=max_sweeps)
    if method == 'lapack':
        return np.linalg.eigvalsh(matrix)
    raise DomainError(f'unknown eigensolver "{method}"')
