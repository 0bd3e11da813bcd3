import numpy as np
import pytest
from scipy.linalg import eigvalsh

from fock.params import DomainError

from .eigen import NoConvergence, NonSymmetric, jacobi_eigenvalues, round_robin_pairs, symmetric_eigenvalues


def random_symmetric(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    return (a + a.T) / 2


def householder_tridiagonal(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """diagonal and off-diagonal of an orthogonally similar tridiagonal matrix"""
    a, n = a.copy(), len(a)
    for k in range(n - 2):
        x = a[k + 1:, k]
        alpha = -np.copysign(np.linalg.norm(x), x[0])
        if alpha == 0:
            continue
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        reflector = np.eye(n)
        reflector[k + 1:, k + 1:] -= 2 * np.outer(v, v)
        a = reflector @ a @ reflector
    return np.diag(a).copy(), np.diag(a, 1).copy()


def sturm_count(diagonal: np.ndarray, off: np.ndarray, x: float) -> int:
    """number of eigenvalues below x"""
    count, q = 0, 1.0
    for i, d in enumerate(diagonal):
        q = d - x - (off[i - 1]**2 / q if i else 0.0)
        if q == 0:
            q = -1e-300
        if q < 0:
            count += 1
    return count


def bisection_eigenvalues(a: np.ndarray) -> np.ndarray:
    diagonal, off = householder_tridiagonal(a)
    bound = np.max(np.abs(diagonal)) + 2 * np.max(np.abs(off), initial=0.0)
    values = []
    for k in range(len(a)):
        lo, hi = -bound, bound
        while lo < (lo + hi) / 2 < hi:
            mid = (lo + hi) / 2
            if sturm_count(diagonal, off, mid) > k:
                hi = mid
            else:
                lo = mid
        values.append((lo + hi) / 2)
    return np.array(values)


def test_single_entry():
    assert symmetric_eigenvalues(np.array([[0.25]])).tolist() == [0.25]


def test_exchange_matrix():
    np.testing.assert_allclose(symmetric_eigenvalues(np.array([[0.0, 1.0], [1.0, 0.0]])), [-1.0, 1.0], atol=1e-15)


def test_zero_and_diagonal():
    assert symmetric_eigenvalues(np.zeros((3, 3))).tolist() == [0, 0, 0]
    assert symmetric_eigenvalues(np.diag([3.0, -1.0, 2.0])).tolist() == [-1.0, 2.0, 3.0]


@pytest.mark.parametrize('n,seed', [(10, 1), (10, 2), (17, 3), (60, 4)])
def test_random_matches_reference(n, seed):
    a = random_symmetric(n, seed)
    computed = symmetric_eigenvalues(a)
    np.testing.assert_allclose(computed, eigvalsh(a), atol=1e-10 * np.linalg.norm(a))
    assert np.sum(computed) == pytest.approx(np.trace(a), abs=1e-12 * np.linalg.norm(a))


@pytest.mark.parametrize('n,seed', [(2, 7), (3, 8), (7, 9), (12, 10), (12, 11)])
def test_random_matches_sturm_bisection(n, seed):
    a = random_symmetric(n, seed)
    np.testing.assert_allclose(symmetric_eigenvalues(a), bisection_eigenvalues(a), atol=1e-10 * np.linalg.norm(a))


def test_sturm_bisection_on_known_spectrum():
    a = np.diag([2.0, 2.0, 2.0]) + np.diag([-1.0, -1.0], 1) + np.diag([-1.0, -1.0], -1)
    np.testing.assert_allclose(bisection_eigenvalues(a), [2 - np.sqrt(2), 2.0, 2 + np.sqrt(2)], atol=1e-13)


def test_degenerate_spectrum():
    rng = np.random.default_rng(5)
    q, _ = np.linalg.qr(rng.normal(size=(8, 8)))
    spectrum = np.array([-1.0, -1.0, 0.5, 0.5, 0.5, 2.0, 2.0, 3.0])
    a = q @ np.diag(spectrum) @ q.T
    a = (a + a.T) / 2
    np.testing.assert_allclose(symmetric_eigenvalues(a), spectrum, atol=1e-12)


def test_lapack_method():
    a = random_symmetric(12, 6)
    np.testing.assert_allclose(symmetric_eigenvalues(a, method='lapack'), symmetric_eigenvalues(a), atol=1e-12)


def test_rejects_non_symmetric():
    with pytest.raises(NonSymmetric):
        symmetric_eigenvalues(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_rejects_bad_input():
    with pytest.raises(DomainError):
        symmetric_eigenvalues(np.ones((2, 3)))
    with pytest.raises(DomainError):
        symmetric_eigenvalues(np.eye(2), method='qr')


def test_sweep_cap():
    with pytest.raises(NoConvergence):
        jacobi_eigenvalues(random_symmetric(6, 7), max_sweeps=0)


@pytest.mark.parametrize('n', [2, 5, 6, 9])
def test_round_robin_covers_pairs(n):
    seen = []
    for k, l in round_robin_pairs(n):
        indices = np.concatenate([k, l])
        # pairs inside one round are disjoint
        assert len(set(indices.tolist())) == len(indices)
        assert np.all(k < l)
        seen += list(zip(k.tolist(), l.tolist()))
    assert sorted(seen) == [(k, l) for k in range(n) for l in range(k + 1, n)]
