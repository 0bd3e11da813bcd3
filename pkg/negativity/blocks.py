import logging
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from fock.params import DomainError, ModelParams, SchmidtState
from fock.states import mixed_density_elements

# PT blocks are exactly symmetric by construction; this only guards against corrupted input
BLOCK_SYMMETRY_TOL = 1e-14


class PtBlock:
    """
    Block K of the partial transpose: entry (a, b) is the element with m1=a, n1=K-a, m2=b, n2=K-b.
    """
    k_total: int
    matrix: np.ndarray

    def __init__(self, k_total: int, matrix: np.ndarray):
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (k_total + 1, k_total + 1):
            raise DomainError(f'block {k_total} must be {k_total + 1}x{k_total + 1}, got {matrix.shape}')
        if not np.all(np.isfinite(matrix)):
            raise DomainError(f'block {k_total} has non-finite entries')
        if np.max(np.abs(matrix - matrix.T)) > BLOCK_SYMMETRY_TOL:
            raise DomainError(f'block {k_total} is not symmetric')
        self.k_total = k_total
        self.matrix = matrix

    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def __repr__(self):
        return f'PtBlock(K={self.k_total}, trace={self.trace():.6g})'


class BlockDiagonalPT:
    blocks: list[PtBlock]
    delta_trace: float

    def __init__(self, blocks: list[PtBlock]):
        for index, block in enumerate(blocks):
            if block.k_total != index:
                raise DomainError(f'block {index} carries label K={block.k_total}')
        self.blocks = blocks
        self.delta_trace = float(sum(block.trace() for block in blocks))

    @property
    def kmax(self) -> int:
        return len(self.blocks) - 1

    def mean_photon_number(self) -> float:
        """sum_K K Tr(block_K), unnormalised"""
        return float(sum(block.k_total * block.trace() for block in self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return f'BlockDiagonalPT(kmax={self.kmax}, delta_trace={self.delta_trace!r})'


def mixed_pt_block(k_total: int, params: ModelParams) -> PtBlock:
    a, b = np.meshgrid(np.arange(k_total + 1), np.arange(k_total + 1), indexing='ij')
    # the transpose on B swaps n1 <-> n2: rho_{a, b, K-b, K-a}
    matrix = mixed_density_elements(a, b, a + b - k_total, params)
    matrix = 0.5 * (matrix + matrix.T)
    return PtBlock(k_total, matrix)


def build_pt_blocks(params: ModelParams, jobs: int = 1) -> BlockDiagonalPT:
    """Partial transpose of the on/on conditioned state, blocks K = 0..kmax"""
    logging.debug(f'building {params.kmax + 1} PT blocks for {params}')
    if jobs == 1:
        blocks = [mixed_pt_block(k_total, params) for k_total in range(params.kmax + 1)]
    else:
        blocks = Parallel(n_jobs=jobs)(delayed(mixed_pt_block)(k_total, params) for k_total in range(params.kmax + 1))
    return BlockDiagonalPT(blocks)


def schmidt_pt_blocks(state: SchmidtState, kmax: Optional[int] = None) -> BlockDiagonalPT:
    """
    Partial transpose of |chi><chi| for chi = sum_n c_n |n>|n>.
    Block K is anti-diagonal with entries c_a c_{K-a}; the default cutoff 2 (len - 1) keeps every coefficient pair.
    """
    coeffs = state.coeffs
    if kmax is None:
        kmax = 2 * (len(coeffs) - 1)
    padded = np.zeros(kmax + 1)
    used = min(len(coeffs), kmax + 1)
    padded[:used] = coeffs[:used]
    blocks = []
    for k_total in range(kmax + 1):
        a = np.arange(k_total + 1)
        matrix = np.zeros((k_total + 1, k_total + 1))
        matrix[a, k_total - a] = padded[a] * padded[k_total - a]
        blocks.append(PtBlock(k_total, matrix))
    return BlockDiagonalPT(blocks)
