import click
import logging
from typing import Optional

from config import comma_str_to_list, config
from constants import MEASURES, PAPER_CROSSINGS
from output import csv_text, emit, json_text, sweep_csv
from runconfig import (
    RunConfig,
    beta_option,
    case_option,
    db_option,
    format_option,
    grid_option,
    jobs_option,
    kmax_option,
    measure_option,
    out_option,
    transmittance_option,
)
from utils import squeezing_db

from .crossing import CrossoverResult, NoSignChange, check_betas, crossover, dense_coding_limit_study, find_crossing, scan_bracket  # noqa: F401
from .grid import SweepRecord, sweep  # noqa: F401
from .values import measure_curve, measure_value  # noqa: F401

CROSSING_MEASURES = [measure for measure in MEASURES if measure != 'meanphoton']


@click.command(name='sweep')
@measure_option()
@grid_option
@transmittance_option
@kmax_option
@beta_option
@format_option
@out_option
@jobs_option
@db_option
def cmd_sweep(
    measure: str,
    grid: Optional[str] = None,
    transmittance: Optional[float] = None,
    kmax: Optional[int] = None,
    beta: Optional[float] = None,
    format: Optional[str] = None,
    out: Optional[str] = None,
    jobs: Optional[int] = None,
    db: bool = False,
):
    """Evaluate a measure for all three resources over a lambda grid"""
    run = RunConfig.from_cli('sweep', transmittance=transmittance, kmax=kmax, beta=beta, grid=grid, format=format, out=out, jobs=jobs)
    records = sweep(measure, run.grid, run.params, run.signal, run.engine.single_job(), jobs=run.jobs)  # type: ignore
    if run.format == 'json':
        rows = [record.to_dict() | ({'squeezing_db': squeezing_db(record.lambda_)} if db else {}) for record in records]
        emit(json_text(rows), run.out)
        return
    if not db:
        emit(sweep_csv(records, run.digits), run.out)
        return
    header = ['lambda', 'value_sq', 'value_pure', 'value_mixed', 'squeezing_db']
    rows = ([r.lambda_, r.value_sq, r.value_pure, r.value_mixed, squeezing_db(r.lambda_)] for r in records)
    emit(csv_text(header, rows, run.digits), run.out)


def _reference(measure: str, case: str, transmittance: float) -> Optional[float]:
    """published intersection, only comparable at the published working point T = 0.9"""
    if measure == 'mutualinfo' or transmittance != 0.9:
        return None
    return PAPER_CROSSINGS.get(measure, {}).get(case)


@click.command(name='crossover')
@measure_option(measures=CROSSING_MEASURES)
@case_option(cases=['pure', 'mixed'])
@transmittance_option
@kmax_option
@beta_option
@click.option('--bracket', type=float, nargs=2, default=None, help='Search interval LO HI; scanned for a sign change if omitted')
@click.option('--tol', type=float, default=None, help='Bisection tolerance in lambda [default: sweep.crossing_tol]')
@format_option
@out_option
def cmd_crossover(
    measure: str,
    case: str,
    transmittance: Optional[float] = None,
    kmax: Optional[int] = None,
    beta: Optional[float] = None,
    bracket: Optional[tuple[float, float]] = None,
    tol: Optional[float] = None,
    format: Optional[str] = None,
    out: Optional[str] = None,
):
    """Find where a conditional resource stops beating the squeezed vacuum"""
    if bracket and not bracket[0] < bracket[1]:
        raise click.BadParameter(f'expected LO < HI, got {bracket[0]} {bracket[1]}', param_hint='--bracket')
    if tol is not None and not tol > 0:
        raise click.BadParameter(f'must be positive, got {tol}', param_hint='--tol')
    run = RunConfig.from_cli('crossover', transmittance=transmittance, kmax=kmax, beta=beta, format=format, out=out)
    sweep_conf = config.file['sweep']
    result = crossover(
        measure,
        case,
        run.params,
        run.signal,
        bracket=tuple(bracket) if bracket else None,  # type: ignore
        tol=tol or sweep_conf['crossing_tol'],
        scan_points=sweep_conf['scan_points'],
        options=run.engine,
    )
    reference = _reference(measure, case, run.params.transmittance)
    logging.info(f'{measure} {case}: lambda* = {result.lambda_star:.6f}' + (f' (published {reference})' if reference else ''))
    fields = {
        'measure': measure,
        'case': case,
        'transmittance': run.params.transmittance,
    } | result.to_dict() | {
        'reference': reference,
    }
    if run.format == 'json':
        emit(json_text(fields), run.out)
        return
    header = ['measure', 'case', 'transmittance', 'lambda_star', 'bracket_lo', 'bracket_hi', 'residual', 'iterations', 'reference']
    row = [measure, case, run.params.transmittance, result.lambda_star, *result.bracket, result.residual, str(result.iterations), reference]
    emit(csv_text(header, [row], run.digits), run.out)


@click.command(name='dense-limit')
@click.option('--betas', default=None, help='Comma separated, strictly decreasing QPSK amplitudes [default: sweep.dense_betas]')
@transmittance_option
@kmax_option
@format_option
@out_option
def cmd_dense_limit(
    betas: Optional[str] = None,
    transmittance: Optional[float] = None,
    kmax: Optional[int] = None,
    format: Optional[str] = None,
    out: Optional[str] = None,
):
    """Dense-coding crossings as the QPSK amplitude shrinks"""
    run = RunConfig.from_cli('dense-limit', transmittance=transmittance, kmax=kmax, format=format, out=out)
    sweep_conf = config.file['sweep']
    try:
        beta_list = comma_str_to_list(betas or '', default=sweep_conf['dense_betas'])
        check_betas(beta_list)
    except ValueError as ex:
        raise click.BadParameter(str(ex), param_hint='--betas') from ex
    rows = dense_coding_limit_study(beta_list, run.params, tol=sweep_conf['crossing_tol'], scan_points=sweep_conf['scan_points'])
    if run.format == 'json':
        emit(json_text([{'beta': beta, 'lambda_star_pure': pure, 'lambda_star_mixed': mixed} for beta, pure, mixed in rows]), run.out)
        return
    emit(csv_text(['beta', 'lambda_star_pure', 'lambda_star_mixed'], rows, run.digits), run.out)
