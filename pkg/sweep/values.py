from typing import Callable, Optional

from constants import CASES, Case, Measure
from densecoding.channel import SignalParams
from densecoding.information import i_mixed, i_pure, i_sq
from fock.params import DomainError, ModelParams
from fock.states import mean_photon_mixed, mean_photon_pure, mean_photon_sq, pure_subtracted_state
from negativity.measures import EngineOptions, EntanglementReport, mixed_negativity, schmidt_negativity, sv_negativity
from teleportation import fid_mixed, fid_pure, fid_sq


def entanglement(case: Case, params: ModelParams, options: Optional[EngineOptions] = None) -> EntanglementReport:
    if case == 'sq':
        return sv_negativity(params.lambda_)
    if case == 'pure':
        return schmidt_negativity(pure_subtracted_state(params))
    if case == 'mixed':
        return mixed_negativity(params, options)
    raise DomainError(f'unknown resource "{case}"')


def measure_value(
    measure: Measure,
    case: Case,
    lambda_: float,
    params: ModelParams,
    signal: Optional[SignalParams] = None,
    options: Optional[EngineOptions] = None,
) -> float:
    """value of `measure` for resource `case` at squeezing `lambda_`; the rest of the model comes from `params`"""
    if case not in CASES:
        raise DomainError(f'unknown resource "{case}"')
    point = params.replace(lambda_=lambda_)
    if measure == 'logneg':
        return entanglement(case, point, options).log_negativity
    if measure == 'neg':
        return entanglement(case, point, options).negativity
    if measure == 'fidelity':
        fidelity = {'sq': lambda: fid_sq(lambda_), 'pure': lambda: fid_pure(point), 'mixed': lambda: fid_mixed(point)}
        return float(fidelity[case]())
    if measure == 'mutualinfo':
        if signal is None:
            raise DomainError('mutual information needs a QPSK amplitude')
        info = {'sq': lambda: i_sq(lambda_, signal.beta), 'pure': lambda: i_pure(point, signal), 'mixed': lambda: i_mixed(point, signal)}
        return info[case]()
    if measure == 'meanphoton':
        photons = {'sq': lambda: mean_photon_sq(lambda_), 'pure': lambda: mean_photon_pure(point), 'mixed': lambda: mean_photon_mixed(point)}
        return photons[case]()
    raise DomainError(f'unknown measure "{measure}"')


def measure_curve(
    measure: Measure,
    case: Case,
    params: ModelParams,
    signal: Optional[SignalParams] = None,
    options: Optional[EngineOptions] = None,
) -> Callable[[float], float]:
    """lambda -> measure_value(...), the form find_crossing and scan_bracket take"""

    def curve(lambda_: float) -> float:
        return measure_value(measure, case, lambda_, params, signal, options)

    curve.__name__ = f'{measure}_{case}'
    return curve
