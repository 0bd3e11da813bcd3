import logging
import math
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from constants import DELTA_WARN, JACOBI_MAX_SWEEPS, JACOBI_TOL, SYMMETRY_TOL
from fock.params import ModelError, ModelParams, SchmidtState, check_lambda
from utils import log_or_exception

from .blocks import BlockDiagonalPT, PtBlock, build_pt_blocks, schmidt_pt_blocks
from .eigen import symmetric_eigenvalues


class TraceLeakage(ModelError):
    pass


class EngineOptions:
    """Eigensolver choice and tolerances, plus the handling of a truncated trace below `delta_warn`"""
    method: str
    tol: float
    max_sweeps: int
    symmetry_tol: float
    delta_warn: float
    strict_delta: bool
    jobs: int

    def __init__(
        self,
        method: str = 'jacobi',
        tol: float = JACOBI_TOL,
        max_sweeps: int = JACOBI_MAX_SWEEPS,
        symmetry_tol: float = SYMMETRY_TOL,
        delta_warn: float = DELTA_WARN,
        strict_delta: bool = False,
        jobs: int = 1,
    ):
        self.method = method
        self.tol = tol
        self.max_sweeps = max_sweeps
        self.symmetry_tol = symmetry_tol
        self.delta_warn = delta_warn
        self.strict_delta = strict_delta
        self.jobs = jobs

    @staticmethod
    def from_config(engine: dict, jobs: int = 1) -> 'EngineOptions':
        return EngineOptions(
            method=engine['eigensolver'],
            tol=engine['jacobi_tol'],
            max_sweeps=engine['max_sweeps'],
            symmetry_tol=engine['symmetry_tol'],
            delta_warn=engine['delta_warn'],
            strict_delta=engine['strict_delta'],
            jobs=jobs,
        )

    def single_job(self) -> 'EngineOptions':
        """the same options without block-level parallelism, for use inside parallel sweeps"""
        return EngineOptions(self.method, self.tol, self.max_sweeps, self.symmetry_tol, self.delta_warn, self.strict_delta, jobs=1)


class EntanglementReport:
    negativity: float
    log_negativity: float
    delta_trace: float
    kmax: Optional[int]
    raw_negativity: float

    def __init__(self, negativity: float, delta_trace: float = 1.0, kmax: Optional[int] = None, raw_negativity: Optional[float] = None):
        # round-off can leave a -1e-17 where the spectrum is non-negative
        self.negativity = max(float(negativity), 0.0)
        self.log_negativity = math.log2(1 + 2 * self.negativity)
        self.delta_trace = float(delta_trace)
        self.kmax = kmax
        self.raw_negativity = self.negativity if raw_negativity is None else float(raw_negativity)

    def to_dict(self) -> dict:
        return {
            'negativity': self.negativity,
            'log_negativity': self.log_negativity,
            'delta_trace': self.delta_trace,
            'kmax': self.kmax,
            'raw_negativity': self.raw_negativity,
        }

    def __repr__(self):
        return f'EntanglementReport(N={self.negativity!r}, E_N={self.log_negativity!r}, delta={self.delta_trace!r}, kmax={self.kmax})'


def _negative_sum(block: PtBlock, options: EngineOptions) -> float:
    eigenvalues = symmetric_eigenvalues(
        block.matrix,
        method=options.method,
        tol=options.tol,
        max_sweeps=options.max_sweeps,
        symmetry_tol=options.symmetry_tol,
    )
    return float(-np.sum(eigenvalues[eigenvalues < 0]))


def negativity_from_blocks(pt: BlockDiagonalPT, options: Optional[EngineOptions] = None) -> EntanglementReport:
    """Sum of |negative eigenvalues| over all blocks, normalised by the truncated trace"""
    options = options or EngineOptions()
    if not pt.delta_trace > 0:
        raise TraceLeakage(f'truncated trace is {pt.delta_trace}, the blocks carry no weight')
    if pt.delta_trace < options.delta_warn:
        log_or_exception(
            options.strict_delta,
            f'truncated trace {pt.delta_trace:.6f} is below {options.delta_warn} at kmax={pt.kmax}: raise kmax',
            exc_class=TraceLeakage,
        )
    if options.jobs == 1:
        sums = [_negative_sum(block, options) for block in pt.blocks]
    else:
        sums = Parallel(n_jobs=options.jobs)(delayed(_negative_sum)(block, options) for block in pt.blocks)
    raw = float(sum(sums))
    logging.debug(f'negative eigenvalue sum {raw!r} over {len(pt)} blocks, delta {pt.delta_trace!r}')
    return EntanglementReport(raw / pt.delta_trace, delta_trace=pt.delta_trace, kmax=pt.kmax, raw_negativity=raw)


def schmidt_negativity(state: SchmidtState) -> EntanglementReport:
    """closed form for a pure state: N = ((sum c_n)^2 - 1) / 2"""
    total = float(np.sum(state.coeffs))
    report = EntanglementReport((total**2 - 1) / 2, delta_trace=state.norm(), kmax=len(state) - 1)
    report.log_negativity = max(2 * math.log2(total), 0.0)
    return report


def numeric_schmidt_negativity(state: SchmidtState, options: Optional[EngineOptions] = None) -> EntanglementReport:
    return negativity_from_blocks(schmidt_pt_blocks(state), options)


def sv_negativity(lambda_: float) -> EntanglementReport:
    check_lambda(lambda_)
    report = EntanglementReport(lambda_ / (1 - lambda_))
    report.log_negativity = math.log2(1 + lambda_) - math.log2(1 - lambda_)
    return report


def limit_t1_negativity(lambda_: float) -> EntanglementReport:
    """one-photon subtraction in the limit of a vanishing tap, T -> 1"""
    check_lambda(lambda_)
    negativity = lambda_ * (2 + lambda_ + lambda_**2) / ((1 + lambda_**2) * (1 - lambda_))
    report = EntanglementReport(negativity)
    report.log_negativity = math.log2((1 + lambda_)**3 / ((1 + lambda_**2) * (1 - lambda_)))
    return report


def mixed_negativity(params: ModelParams, options: Optional[EngineOptions] = None) -> EntanglementReport:
    options = options or EngineOptions()
    pt = build_pt_blocks(params, jobs=options.jobs)
    return negativity_from_blocks(pt, options)
