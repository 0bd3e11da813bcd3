from typing_extensions import Literal, TypeAlias

# T=0.9 and K_max=50 are the working point of the reference study
DEFAULT_T = 0.9
DEFAULT_KMAX = 50
DEFAULT_TAIL_REL_TOL = 1e-16
DEFAULT_MAX_TERMS = 500
DEFAULT_BETA = 1.5

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12
DELTA_WARN = 0.995

QUADRATURE_EPSABS = 1e-14
QUADRATURE_EPSREL = 1e-10
QUADRATURE_HALF_WIDTH = 12.0

CROSSING_TOL = 1e-4
SCAN_POINTS = 40
DEFAULT_GRID = '0.05:0.9:50'
DENSE_LIMIT_BETAS = [1.5, 1.0, 0.7, 0.4, 0.2, 0.1, 0.05]

Case: TypeAlias = Literal['sq', 'pure', 'mixed']
CASES: list[str] = ['sq', 'pure', 'mixed']
CONDITIONAL_CASES: list[str] = ['pure', 'mixed']

Measure: TypeAlias = Literal['logneg', 'neg', 'fidelity', 'mutualinfo', 'meanphoton']
MEASURES: list[str] = ['logneg', 'neg', 'fidelity', 'mutualinfo', 'meanphoton']

EIGENSOLVERS: list[str] = ['jacobi', 'lapack']
FORMATS: list[str] = ['csv', 'json']

SWEEP_CSV_HEADER: list[str] = ['lambda', 'value_sq', 'value_pure', 'value_mixed']

# intersections with the squeezed-vacuum curve at T=0.9, as published
PAPER_CROSSINGS: dict[str, dict[str, float]] = {
    'logneg': {
        'pure': 0.897,
        'mixed': 0.772,
    },
    'fidelity': {
        'pure': 0.815,
        'mixed': 0.708,
    },
    'mutualinfo': {
        'pure': 0.894,
        'mixed': 0.762,
    },
}

# brackets the crossover command uses unless --bracket is passed
CROSSING_BRACKETS: dict[str, tuple[float, float]] = {
    'logneg': (0.6, 0.95),
    'neg': (0.6, 0.95),
    'fidelity': (0.6, 0.9),
    'mutualinfo': (0.3, 0.97),
}
