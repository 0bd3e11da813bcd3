import click
import logging
from typing import Optional

from fock.states import pure_subtracted_state, sv_state
from output import csv_text, emit, json_text
from runconfig import RunConfig, case_option, db_option, format_option, jobs_option, kmax_option, lambda_option, out_option, transmittance_option
from utils import squeezing_db

from .blocks import BlockDiagonalPT, build_pt_blocks, schmidt_pt_blocks
from .measures import mixed_negativity, schmidt_negativity, sv_negativity


def _require_lambda(lambda_: Optional[float]) -> float:
    if lambda_ is None:
        raise click.UsageError('Missing option "--lambda"')
    return lambda_


@click.command(name='negativity')
@lambda_option
@case_option(default='mixed')
@transmittance_option
@kmax_option
@format_option
@out_option
@jobs_option
@db_option
def cmd_negativity(
    lambda_: Optional[float] = None,
    case: str = 'mixed',
    transmittance: Optional[float] = None,
    kmax: Optional[int] = None,
    format: Optional[str] = None,
    out: Optional[str] = None,
    jobs: Optional[int] = None,
    db: bool = False,
):
    """Negativity and logarithmic negativity at a single point"""
    lambda_ = _require_lambda(lambda_)
    run = RunConfig.from_cli('negativity', lambda_=lambda_, transmittance=transmittance, kmax=kmax, format=format, out=out, jobs=jobs)
    params = run.params
    if case == 'sq':
        report = sv_negativity(lambda_)
    elif case == 'pure':
        report = schmidt_negativity(pure_subtracted_state(params))
    else:
        report = mixed_negativity(params, run.engine)
    logging.info(f'{case} at lambda={lambda_}, T={params.transmittance}: N={report.negativity:.10g}, E_N={report.log_negativity:.10g}')
    fields = {
        'case': case,
        'lambda': lambda_,
        'transmittance': params.transmittance,
        'negativity': report.negativity,
        'log_negativity': report.log_negativity,
        'delta_trace': report.delta_trace,
        'kmax': report.kmax,
    }
    if db:
        fields['squeezing_db'] = squeezing_db(lambda_)
    if run.format == 'json':
        emit(json_text(fields), run.out)
        return
    row = [case] + [value if not isinstance(value, int) else str(value) for value in list(fields.values())[1:]]
    emit(csv_text(list(fields.keys()), [row], run.digits), run.out)


def state_blocks(case: str, run: RunConfig) -> BlockDiagonalPT:
    params = run.params
    if case == 'sq':
        return schmidt_pt_blocks(sv_state(params.lambda_, params.kmax, params.tail_rel_tol, params.max_terms), params.kmax)
    if case == 'pure':
        return schmidt_pt_blocks(pure_subtracted_state(params), params.kmax)
    return build_pt_blocks(params, jobs=run.jobs)


@click.command(name='state')
@lambda_option
@case_option(default='mixed')
@transmittance_option
@kmax_option
@format_option
@out_option
@jobs_option
def cmd_state(
    lambda_: Optional[float] = None,
    case: str = 'mixed',
    transmittance: Optional[float] = None,
    kmax: Optional[int] = None,
    format: Optional[str] = None,
    out: Optional[str] = None,
    jobs: Optional[int] = None,
):
    """Dump the partial-transpose blocks K = 0..kmax"""
    lambda_ = _require_lambda(lambda_)
    run = RunConfig.from_cli('state', lambda_=lambda_, transmittance=transmittance, kmax=kmax, format=format, out=out, jobs=jobs)
    pt = state_blocks(case, run)
    logging.info(f'{len(pt)} blocks, truncated trace {pt.delta_trace:.12g}')
    if run.format == 'json':
        emit(json_text({'kmax': pt.kmax, 'delta_trace': pt.delta_trace, 'blocks': [block.matrix.tolist() for block in pt.blocks]}), run.out)
        return
    rows = ([str(block.k_total), str(a), str(b), float(block.matrix[a, b])] for block in pt.blocks for a in range(block.k_total + 1)
            for b in range(block.k_total + 1))
    emit(csv_text(['k_total', 'a', 'b', 'value'], rows, run.digits), run.out)
