import click
import logging
import math
from typing import Callable

import numpy as np
from scipy.special import erf as reference_erf

from config import config
from densecoding.channel import SignalParams, channel_matrix, channel_quadrature
from densecoding.erf import erf
from fock.oracle import povm_density_elements
from fock.params import ModelParams
from fock.states import mixed_density_elements, pure_subtracted_state, sv_state
from negativity.measures import numeric_schmidt_negativity, schmidt_negativity, sv_negativity
from teleportation import fid_mixed, fid_pure, fid_quadrature


class SelftestFailure(Exception):
    pass


def check_povm_oracle() -> float:
    """largest relative deviation of the reduced element sums from the four-mode construction"""
    worst = 0.0
    for lambda_, t in [(0.2, 0.8), (0.5, 0.9), (0.7, 0.9)]:
        params = ModelParams(lambda_, t)
        expected = povm_density_elements(params, size=9)
        m1, m2, n1, n2 = np.meshgrid(*(np.arange(9),) * 4, indexing='ij')
        allowed = m1 - n1 == m2 - n2
        computed = mixed_density_elements(m1[allowed], m2[allowed], (m1 - n1)[allowed], params)
        worst = max(worst, float(np.max(np.abs(computed / expected[allowed] - 1))))
    return worst


def check_sv_blocks() -> float:
    return max(
        abs(numeric_schmidt_negativity(sv_state(lambda_, 60)).negativity - sv_negativity(lambda_).negativity)
        for lambda_ in np.linspace(0.1, 0.8, 8))


def check_pure_blocks() -> float:
    worst = 0.0
    for lambda_ in (0.3, 0.6, 0.8):
        state = pure_subtracted_state(ModelParams(lambda_, 0.9))
        worst = max(worst, abs(numeric_schmidt_negativity(state).negativity - schmidt_negativity(state).negativity))
    return worst


def check_erf() -> float:
    x = np.linspace(-7, 7, 2801)
    return max(float(np.max(np.abs(erf(x) - reference_erf(x)))), abs(erf(1.0) - 0.842700792949715))


def check_fidelity_quadrature() -> float:
    params, quadrature = ModelParams(0.5, 0.9), config.file['quadrature']
    return max(
        abs(fid_quadrature('pure', params, **quadrature) - float(fid_pure(params))),
        abs(fid_quadrature('mixed', params, alpha0=1 + 2j, **quadrature) - float(fid_mixed(params))),
    )


def check_channel_quadrature() -> float:
    params, signal = ModelParams(0.5, 0.9), SignalParams(1.5)
    return max(
        float(np.max(np.abs(channel_quadrature(kind, params, signal, **config.file['quadrature']).probs - channel_matrix(kind, params, signal).probs)))  # type: ignore
        for kind in ('sq', 'pure', 'mixed'))


# name -> (check, tolerance); every check returns its worst absolute or relative deviation
CHECKS: dict[str, tuple[Callable[[], float], float]] = {
    'povm-oracle': (check_povm_oracle, 1e-10),
    'sv-blocks': (check_sv_blocks, 1e-6),
    'pure-blocks': (check_pure_blocks, 1e-8),
    'erf': (check_erf, 1e-14),
    'fidelity-quadrature': (check_fidelity_quadrature, 1e-8),
    'channel-quadrature': (check_channel_quadrature, 1e-6),
}


def run_checks(names: list[str]) -> dict[str, bool]:
    results = {}
    for name in names:
        check, tolerance = CHECKS[name]
        deviation = check()
        passed = math.isfinite(deviation) and deviation <= tolerance
        log = logging.info if passed else logging.error
        log(f'{name}: deviation {deviation:.3e} (tolerance {tolerance:.0e}) {"ok" if passed else "FAILED"}')
        results[name] = passed
    return results


@click.command(name='selftest')
@click.argument('names', nargs=-1, type=click.Choice(list(CHECKS.keys())))
def cmd_selftest(names: list[str]):
    """Run the oracle cross-checks (all of them unless NAMES are given)"""
    results = run_checks(list(names) or list(CHECKS.keys()))
    failed = [name for name, passed in results.items() if not passed]
    if failed:
        raise SelftestFailure(f'{len(failed)} of {len(results)} checks failed: {", ".join(failed)}')
    logging.info(f'All {len(results)} checks passed')
