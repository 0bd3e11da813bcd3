import math

from fock.params import ModelParams, check_lambda

from .channel import SignalParams, mixed_weights, normalized_weights, pure_weights, sq_curvature
from .erf import erf

MAX_BITS = 2.0


def _xlog2x(value: float) -> float:
    return value * math.log2(value) if value > 0 else 0.0


def _clamp_bits(value: float) -> float:
    return min(max(value, 0.0), MAX_BITS)


def information_from_weights(i1: float, i2: float, i4: float) -> float:
    """I = 1/4 sum_k I_k log2 I_k over the four decision regions of a symbol, I_3 = I_2"""
    i1, i2, i4 = normalized_weights(i1, i2, i4)
    return _clamp_bits((_xlog2x(i1) + 2 * _xlog2x(i2) + _xlog2x(i4)) / 4)


def i_sq(lambda_: float, beta: float) -> float:
    """(1 + e) log2(1 + e) + (1 - e) log2(1 - e) with e = erf(sqrt(kappa) beta)"""
    check_lambda(lambda_)
    e = float(erf(math.sqrt(sq_curvature(lambda_)) * beta))
    return _clamp_bits(_xlog2x(1 + e) + _xlog2x(1 - e))


def i_pure(params: ModelParams, signal: SignalParams) -> float:
    return information_from_weights(*pure_weights(params, signal))


def i_mixed(params: ModelParams, signal: SignalParams) -> float:
    return information_from_weights(*mixed_weights(params, signal))
