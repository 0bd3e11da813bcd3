import logging
import math

import numpy as np

from fock.params import DomainError


def log_or_exception(raise_exception: bool, msg: str, exc_class=Exception, log_level=logging.WARNING):
    if raise_exception:
        raise exc_class(msg)
    else:
        logging.log(log_level, msg)


def squeezing_db(lambda_: float) -> float:
    """squeezing of a two-mode squeezed vacuum with lambda = tanh r, in dB"""
    if not 0 <= lambda_ < 1:
        raise DomainError(f'lambda must lie in [0, 1), got {lambda_}')
    return -10 * math.log10((1 - lambda_) / (1 + lambda_))


def parse_grid(spec: str) -> list[float]:
    """'a:b:n' -> n evenly spaced values from a to b inclusive"""
    parts = spec.split(':')
    if len(parts) != 3:
        raise DomainError(f'grid must look like start:stop:count, got "{spec}"')
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as ex:
        raise DomainError(f'invalid grid "{spec}": {ex}')
    if count < 1:
        raise DomainError(f'grid needs at least one point, got {count}')
    if count > 1 and not start < stop:
        raise DomainError(f'grid must be increasing, got {start} to {stop}')
    return np.linspace(start, stop, count).tolist()
