"""
Intersections of a conditional-state curve with the squeezed-vacuum curve.

Every curve here is a plain callable lambda -> value; a crossing is a root of f - g found by bisection.
"""

import logging
import math
from typing import Callable, Optional

import numpy as np

from constants import CROSSING_BRACKETS, CROSSING_TOL, DENSE_LIMIT_BETAS, SCAN_POINTS
from densecoding.channel import SignalParams
from fock.params import DomainError, ModelError, ModelParams

from .values import measure_curve

Curve = Callable[[float], float]


class NoSignChange(ModelError):
    pass


class CrossoverResult:
    lambda_star: float
    bracket: tuple[float, float]
    residual: float
    iterations: int

    def __init__(self, lambda_star: float, bracket: tuple[float, float], residual: float, iterations: int):
        self.lambda_star = lambda_star
        self.bracket = bracket
        self.residual = residual
        self.iterations = iterations

    def to_dict(self) -> dict:
        return {
            'lambda_star': self.lambda_star,
            'bracket': list(self.bracket),
            'residual': self.residual,
            'iterations': self.iterations,
        }

    def __repr__(self):
        return f'CrossoverResult(lambda*={self.lambda_star!r}, bracket={self.bracket}, residual={self.residual!r}, iterations={self.iterations})'


def _difference(f: Curve, g: Curve, lambda_: float) -> float:
    value = f(lambda_) - g(lambda_)
    if not math.isfinite(value):
        raise NoSignChange(f'{getattr(f, "__name__", "f")} - {getattr(g, "__name__", "g")} is not finite at lambda={lambda_}')
    return value


def find_crossing(f: Curve, g: Curve, bracket: tuple[float, float], tol: float = CROSSING_TOL) -> CrossoverResult:
    """bisection on f - g until the bracket is narrower than `tol`"""
    lo, hi = bracket
    if not lo < hi:
        raise DomainError(f'crossing bracket must satisfy lo < hi, got {bracket}')
    if not tol > 0:
        raise DomainError(f'crossing tolerance must be positive, got {tol}')
    d_lo, d_hi = _difference(f, g, lo), _difference(f, g, hi)
    if d_lo == 0:
        return CrossoverResult(lo, (lo, hi), 0.0, 0)
    if d_hi == 0:
        return CrossoverResult(hi, (lo, hi), 0.0, 0)
    if (d_lo > 0) == (d_hi > 0):
        raise NoSignChange(f'f - g has the same sign at both ends of [{lo}, {hi}]: {d_lo!r}, {d_hi!r}')
    iterations = 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        d_mid = _difference(f, g, mid)
        iterations += 1
        logging.debug(f'bisection step {iterations}: f - g = {d_mid!r} at lambda={mid!r}')
        if d_mid == 0:
            lo = hi = mid
            break
        if (d_mid > 0) == (d_lo > 0):
            lo, d_lo = mid, d_mid
        else:
            hi = mid
    lambda_star = (lo + hi) / 2
    return CrossoverResult(lambda_star, bracket, abs(f(lambda_star) - g(lambda_star)), iterations)


def scan_bracket(f: Curve, g: Curve, lo: float, hi: float, points: int = SCAN_POINTS) -> tuple[float, float]:
    """
    Coarse scan of f - g on `points` evenly spaced values; returns the neighbours around the last
    change from positive to non-positive. Points where a curve is unavailable are skipped.
    """
    grid = np.linspace(lo, hi, points)
    samples: list[tuple[float, float]] = []
    for lambda_ in grid:
        try:
            samples.append((float(lambda_), _difference(f, g, float(lambda_))))
        except ModelError as ex:
            logging.debug(f'scan skips lambda={lambda_}: {ex}')
    for (left, d_left), (right, d_right) in reversed(list(zip(samples, samples[1:]))):
        if d_left > 0 >= d_right:
            return left, right
    raise NoSignChange(f'no crossing from above to below found on [{lo}, {hi}] with {points} points')


def crossover(
    measure: str,
    case: str,
    params: ModelParams,
    signal: Optional[SignalParams] = None,
    bracket: Optional[tuple[float, float]] = None,
    tol: float = CROSSING_TOL,
    scan_points: int = SCAN_POINTS,
    options=None,
) -> CrossoverResult:
    """
    Crossing of `case` with the squeezed vacuum for `measure`.
    Without a bracket the default range for the measure is scanned first.
    """
    if case == 'sq':
        raise DomainError('the squeezed vacuum is the reference curve, pick a conditional case')
    f = measure_curve(measure, case, params, signal, options)  # type: ignore
    g = measure_curve(measure, 'sq', params, signal, options)  # type: ignore
    if bracket is None:
        lo, hi = CROSSING_BRACKETS.get(measure, (0.05, 0.95))
        bracket = scan_bracket(f, g, lo, hi, scan_points)
        logging.debug(f'{measure} {case}: scan found bracket {bracket}')
    return find_crossing(f, g, bracket, tol)


def check_betas(betas: list[float]):
    if not betas:
        raise DomainError('need at least one QPSK amplitude')
    if any(beta <= 0 for beta in betas):
        raise DomainError(f'QPSK amplitudes must be positive, got {betas}')
    if any(later >= earlier for earlier, later in zip(betas, betas[1:])):
        raise DomainError('QPSK amplitudes must be strictly decreasing')


def dense_coding_limit_study(
    betas: list[float] = DENSE_LIMIT_BETAS,
    params: Optional[ModelParams] = None,
    tol: float = CROSSING_TOL,
    scan_points: int = SCAN_POINTS,
) -> list[tuple[float, Optional[float], Optional[float]]]:
    """
    (beta, lambda*_pure, lambda*_mixed) for a decreasing sequence of QPSK amplitudes.
    A beta without a crossing is kept with None in place of lambda*.
    """
    params = params or ModelParams(0.0)
    check_betas(betas)
    rows: list[tuple[float, Optional[float], Optional[float]]] = []
    for beta in betas:
        stars: list[Optional[float]] = []
        for case in ('pure', 'mixed'):
            try:
                result = crossover('mutualinfo', case, params, SignalParams(beta), tol=tol, scan_points=scan_points)
                stars.append(result.lambda_star)
            except NoSignChange as ex:
                logging.warning(f'dense coding {case} at beta={beta}: {ex}')
                stars.append(None)
        logging.info(f'beta={beta}: lambda* pure={stars[0]}, mixed={stars[1]}')
        rows.append((beta, stars[0], stars[1]))
    return rows
