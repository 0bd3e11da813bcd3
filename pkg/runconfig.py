import click
import logging
from typing import Optional

from config import config
from constants import CASES, FORMATS, MEASURES
from densecoding.channel import SignalParams
from fock.params import DomainError, ModelParams
from negativity.measures import EngineOptions
from utils import parse_grid


class RunConfig:
    """
    Everything a subcommand needs, merged from the config file and the command line.
    CLI values win over the file; `None` means "not given on the command line".
    """
    subcommand: str
    params: ModelParams
    signal: SignalParams
    grid: list[float]
    format: str
    out: Optional[str]
    jobs: int
    engine: EngineOptions

    def __init__(
        self,
        subcommand: str,
        params: ModelParams,
        signal: SignalParams,
        grid: list[float],
        format: str = 'csv',
        out: Optional[str] = None,
        jobs: int = 1,
        engine: Optional[EngineOptions] = None,
    ):
        if format not in FORMATS:
            raise DomainError(f'unknown output format "{format}", choose one of {FORMATS}')
        if jobs == 0:
            raise DomainError('jobs must be non-zero (negative values count back from the CPU count)')
        self.subcommand = subcommand
        self.params = params
        self.signal = signal
        self.grid = grid
        self.format = format
        self.out = out
        self.jobs = jobs
        self.engine = engine or EngineOptions(jobs=jobs)

    @staticmethod
    def from_cli(
        subcommand: str,
        lambda_: Optional[float] = None,
        transmittance: Optional[float] = None,
        kmax: Optional[int] = None,
        beta: Optional[float] = None,
        grid: Optional[str] = None,
        format: Optional[str] = None,
        out: Optional[str] = None,
        jobs: Optional[int] = None,
    ) -> 'RunConfig':
        config.enforce_config_loaded()
        file = config.file
        model = file['model']
        if jobs is None:
            jobs = file['sweep']['jobs']
        try:
            grid_values = parse_grid(grid or file['sweep']['grid'])
        except DomainError as ex:
            raise click.BadParameter(str(ex), param_hint='--grid') from ex
        # out-of-domain values exit as usage errors (2)
        try:
            params = ModelParams(
                lambda_ if lambda_ is not None else 0.0,
                transmittance=transmittance if transmittance is not None else model['transmittance'],
                kmax=kmax if kmax is not None else model['kmax'],
                tail_rel_tol=model['tail_rel_tol'],
                max_terms=model['max_terms'],
            )
            run = RunConfig(
                subcommand,
                params=params,
                signal=SignalParams(beta if beta is not None else file['signal']['beta']),
                grid=grid_values,
                format=format or file['output']['format'],
                out=out,
                jobs=jobs,
                engine=EngineOptions.from_config(file['engine'], jobs=jobs),
            )
        except DomainError as ex:
            raise click.UsageError(str(ex), ctx=click.get_current_context(silent=True)) from ex
        logging.debug(f'{subcommand}: {run!r}')
        return run

    @property
    def digits(self) -> int:
        return config.file['output']['digits']

    def __repr__(self):
        return (f'RunConfig({self.subcommand}, {self.params!r}, {self.signal!r}, {len(self.grid)} grid points, '
                f'format={self.format}, out={self.out}, jobs={self.jobs})')


lambda_option = click.option('--lambda', 'lambda_', type=float, default=None, help='Squeezing parameter lambda = tanh r, 0 <= lambda < 1')
transmittance_option = click.option('--T', 'transmittance', type=float, default=None, help='Tap beam splitter transmittance [default: model.transmittance]')
kmax_option = click.option('--kmax', type=int, default=None, help='Fock cutoff on K = m + n [default: model.kmax]')
beta_option = click.option('--beta', type=float, default=None, help='QPSK amplitude for dense coding [default: signal.beta]')
grid_option = click.option('--grid', default=None, help='Lambda grid as start:stop:count [default: sweep.grid]')
format_option = click.option('--format', 'format', type=click.Choice(FORMATS), default=None, help='Output format [default: output.format]')
out_option = click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None, help='Write to this file instead of stdout')
jobs_option = click.option('--jobs', '-j', type=int, default=None, help='Parallel workers (joblib n_jobs) [default: sweep.jobs]')
db_option = click.option('--db', is_flag=True, default=False, help='Also report the squeezing in dB')


def case_option(default: Optional[str] = None, cases: list[str] = CASES):
    return click.option(
        '--case',
        type=click.Choice(cases),
        default=default,
        required=default is None,
        help='Resource state: squeezed vacuum, one-photon subtracted pure state or on/on mixed state',
    )


def measure_option(default: Optional[str] = None, measures: list[str] = MEASURES):
    return click.option('--measure', type=click.Choice(measures), default=default, required=default is None, help='Figure of merit')
