from typing import Optional, Sequence

import numpy as np

from constants import DEFAULT_KMAX, DEFAULT_MAX_TERMS, DEFAULT_T, DEFAULT_TAIL_REL_TOL


class ModelError(Exception):
    """Base class of every numeric-domain failure raised by psneg"""


class DomainError(ModelError, ValueError):
    pass


class ZeroDetectionProbability(ModelError):
    pass


class ModelParams:
    """
    Squeezing `lambda_` (= tanh r), tap transmittance `transmittance` and Fock cutoff `kmax`.
    The reflectance is always derived from the transmittance.
    """
    lambda_: float
    transmittance: float
    kmax: int
    tail_rel_tol: float
    max_terms: int

    def __init__(
        self,
        lambda_: float,
        transmittance: float = DEFAULT_T,
        kmax: int = DEFAULT_KMAX,
        tail_rel_tol: float = DEFAULT_TAIL_REL_TOL,
        max_terms: int = DEFAULT_MAX_TERMS,
    ):
        if not 0 <= lambda_ < 1:
            raise DomainError(f'lambda must lie in [0, 1), got {lambda_}')
        if not 0 < transmittance <= 1:
            raise DomainError(f'transmittance must lie in (0, 1], got {transmittance}')
        if kmax < 0 or int(kmax) != kmax:
            raise DomainError(f'kmax must be a non-negative integer, got {kmax}')
        if not tail_rel_tol > 0:
            raise DomainError(f'tail_rel_tol must be positive, got {tail_rel_tol}')
        if max_terms < 1:
            raise DomainError(f'max_terms must be positive, got {max_terms}')
        self.lambda_ = float(lambda_)
        self.transmittance = float(transmittance)
        self.kmax = int(kmax)
        self.tail_rel_tol = float(tail_rel_tol)
        self.max_terms = int(max_terms)

    @property
    def reflectance(self) -> float:
        return 1.0 - self.transmittance

    def replace(self, **changes) -> 'ModelParams':
        fields = {
            'lambda_': self.lambda_,
            'transmittance': self.transmittance,
            'kmax': self.kmax,
            'tail_rel_tol': self.tail_rel_tol,
            'max_terms': self.max_terms,
        }
        return ModelParams(**(fields | changes))

    def __eq__(self, other) -> bool:
        return isinstance(other, ModelParams) and repr(self) == repr(other)

    def __hash__(self) -> int:
        return hash(repr(self))

    def __repr__(self):
        return f'ModelParams(lambda={self.lambda_!r}, T={self.transmittance!r}, kmax={self.kmax}, tol={self.tail_rel_tol!r})'


class SchmidtState:
    """Non-negative Schmidt coefficients c_0, c_1, ... of a pure state sum_n c_n |n>|n>"""
    coeffs: np.ndarray

    def __init__(self, coeffs: Sequence[float], tail_rel_tol: Optional[float] = None):
        values = np.asarray(coeffs, dtype=float)
        if values.ndim != 1 or not values.size:
            raise DomainError('Schmidt coefficients must be a non-empty vector')
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise DomainError('Schmidt coefficients must be finite and non-negative')
        if tail_rel_tol is not None:
            norm = float(np.sum(values**2))
            # summation round-off is allowed on top of the tail tolerance
            if not 1 - 10 * tail_rel_tol - 1e-12 <= norm <= 1 + 1e-12:
                raise DomainError(f'Schmidt coefficients are not normalized: sum c_n^2 = {norm!r}')
        self.coeffs = values

    def norm(self) -> float:
        return float(np.sum(self.coeffs**2))

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f'SchmidtState({len(self.coeffs)} coefficients, norm={self.norm():.15g})'


class DensityElementKey:
    """Fock indices of rho_{m1 m2 n1 n2} = <m1|<n1| rho |m2>|n2>, m on mode A and n on mode B"""
    m1: int
    m2: int
    n1: int
    n2: int

    def __init__(self, m1: int, m2: int, n1: int, n2: int):
        if min(m1, m2, n1, n2) < 0:
            raise DomainError(f'Fock indices must be non-negative, got {(m1, m2, n1, n2)}')
        self.m1, self.m2, self.n1, self.n2 = int(m1), int(m2), int(n1), int(n2)

    def allowed(self) -> bool:
        return self.m1 - self.n1 == self.m2 - self.n2

    def swapped(self) -> 'DensityElementKey':
        """the key of the transposed (row <-> column) element"""
        return DensityElementKey(self.m2, self.m1, self.n2, self.n1)

    def __iter__(self):
        return iter((self.m1, self.m2, self.n1, self.n2))

    def __repr__(self):
        return f'DensityElementKey({self.m1}, {self.m2}, {self.n1}, {self.n2})'


def check_lambda(lambda_: float):
    if not 0 <= lambda_ < 1:
        raise DomainError(f'lambda must lie in [0, 1), got {lambda_}')
