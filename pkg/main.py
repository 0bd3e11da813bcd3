#!/usr/bin/env python3

import click
from traceback import format_exc as get_trace
from typing import Optional

from logger import logging, setup_logging, verbose_option
from config import config, config_option, cmd_config
from negativity.cli import cmd_negativity, cmd_state
from selftest import cmd_selftest
from sweep import cmd_crossover, cmd_dense_limit, cmd_sweep


@click.group()
@verbose_option
@config_option
def cli(verbose: bool = False, config_file: Optional[str] = None):
    setup_logging(verbose)
    config.runtime['verbose'] = verbose
    config.try_load_file(config_file)


def main():
    try:
        return cli(prog_name='psneg', standalone_mode=False)
    except click.exceptions.Abort:
        logging.fatal('Aborted!')
        exit(1)
    except click.ClickException as ex:
        ex.show()
        exit(ex.exit_code)
    except Exception as ex:
        if config.runtime['verbose']:
            logging.fatal(get_trace())
        else:
            logging.fatal(f'{type(ex).__name__}: {ex}')
        exit(1)


cli.add_command(cmd_config)
cli.add_command(cmd_negativity)
cli.add_command(cmd_state)
cli.add_command(cmd_sweep)
cli.add_command(cmd_crossover)
cli.add_command(cmd_dense_limit)
cli.add_command(cmd_selftest)

if __name__ == '__main__':
    main()
