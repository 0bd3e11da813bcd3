from .blocks import BlockDiagonalPT, PtBlock, build_pt_blocks, schmidt_pt_blocks  # noqa: F401
from .eigen import NoConvergence, NonSymmetric, jacobi_eigenvalues, symmetric_eigenvalues  # noqa: F401
from .measures import (  # noqa: F401
    EngineOptions,
    EntanglementReport,
    TraceLeakage,
    limit_t1_negativity,
    mixed_negativity,
    negativity_from_blocks,
    numeric_schmidt_negativity,
    schmidt_negativity,
    sv_negativity,
)
