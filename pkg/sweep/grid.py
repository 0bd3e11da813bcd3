import logging
from typing import Optional

from joblib import Parallel, delayed

from constants import CASES, MEASURES, Measure
from densecoding.channel import SignalParams
from fock.params import DomainError, ModelError, ModelParams
from negativity.measures import EngineOptions

from .values import measure_value


class SweepRecord:
    """One grid point of a sweep; a value is None where its case is unavailable (e.g. conditional states at lambda = 0)"""
    lambda_: float
    value_sq: Optional[float]
    value_pure: Optional[float]
    value_mixed: Optional[float]
    measure: str
    errors: dict[str, str]

    def __init__(
        self,
        lambda_: float,
        measure: str,
        value_sq: Optional[float] = None,
        value_pure: Optional[float] = None,
        value_mixed: Optional[float] = None,
        errors: dict[str, str] = {},
    ):
        self.lambda_ = float(lambda_)
        self.measure = measure
        self.value_sq = value_sq
        self.value_pure = value_pure
        self.value_mixed = value_mixed
        self.errors = dict(errors)

    def value(self, case: str) -> Optional[float]:
        return getattr(self, f'value_{case}')

    def to_dict(self) -> dict:
        return {
            'lambda': self.lambda_,
            'value_sq': self.value_sq,
            'value_pure': self.value_pure,
            'value_mixed': self.value_mixed,
        }

    def __repr__(self):
        return f'SweepRecord({self.measure}, lambda={self.lambda_!r}, sq={self.value_sq!r}, pure={self.value_pure!r}, mixed={self.value_mixed!r})'


def _sweep_point(
    measure: Measure,
    lambda_: float,
    cases: list[str],
    params: ModelParams,
    signal: Optional[SignalParams],
    options: Optional[EngineOptions],
) -> SweepRecord:
    values: dict[str, Optional[float]] = {}
    errors: dict[str, str] = {}
    for case in cases:
        try:
            values[f'value_{case}'] = measure_value(measure, case, lambda_, params, signal, options)  # type: ignore
        except ModelError as ex:
            errors[case] = f'{type(ex).__name__}: {ex}'
    return SweepRecord(lambda_, measure, errors=errors, **values)


def sweep(
    measure: Measure,
    grid: list[float],
    params: ModelParams,
    signal: Optional[SignalParams] = None,
    options: Optional[EngineOptions] = None,
    cases: list[str] = CASES,
    jobs: int = 1,
) -> list[SweepRecord]:
    """
    Evaluate `measure` for every case on every grid point.
    Points run through joblib when `jobs != 1` and come back in grid order,
    so the result does not depend on the number of workers.
    """
    if measure not in MEASURES:
        raise DomainError(f'unknown measure "{measure}"')
    if any(later <= earlier for earlier, later in zip(grid, grid[1:])):
        raise DomainError('sweep grid must be strictly increasing')
    logging.info(f'Sweeping {measure} over {len(grid)} points for {", ".join(cases)}')
    if jobs == 1:
        records = [_sweep_point(measure, lambda_, cases, params, signal, options) for lambda_ in grid]
    else:
        records = Parallel(n_jobs=jobs)(delayed(_sweep_point)(measure, lambda_, cases, params, signal, options) for lambda_ in grid)
    for record in records:
        for case, error in record.errors.items():
            logging.warning(f'{measure} {case} unavailable at lambda={record.lambda_}: {error}')
    return records
