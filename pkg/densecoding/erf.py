# Rational approximations of erf from FreeBSD's msun (s_erf.c):
# Copyright (C) 1993 by Sun Microsystems, Inc. All rights reserved.
# Developed at SunPro, a Sun Microsystems, Inc. business.
# Permission to use, copy, modify, and distribute this
# software is freely granted, provided that this notice
# is preserved.

import numpy as np
from numpy.polynomial import Polynomial

# erf(1) rounded to single precision; the [0.84375, 1.25) bin is erf(1) + P(x - 1) / Q(x - 1)
ERX = 8.45062911510467529297e-01
# 2 / sqrt(pi) - 1
EFX = 1.28379167095512586316e-01

# erf(x) = x + x P(x^2) / Q(x^2) on [2**-28, 0.84375)
SMALL_NUM = Polynomial([
    1.28379167095512558561e-01,
    -3.25042107247001499370e-01,
    -2.84817495755985104766e-02,
    -5.77027029648944159157e-03,
    -2.37630166566501626084e-05,
])
SMALL_DEN = Polynomial([
    1.0,
    3.97917223959155352819e-01,
    6.50222499887672944485e-02,
    5.08130628187576562776e-03,
    1.32494738004321644526e-04,
    -3.96022827877536812320e-06,
])

# erf(x) = ERX + P(x - 1) / Q(x - 1) on [0.84375, 1.25)
NEAR_ONE_NUM = Polynomial([
    -2.36211856075265944077e-03,
    4.14856118683748331666e-01,
    -3.72207876035701323847e-01,
    3.18346619901161753674e-01,
    -1.10894694282396677476e-01,
    3.54783043256182359371e-02,
    -2.16637559486879084300e-03,
])
NEAR_ONE_DEN = Polynomial([
    1.0,
    1.06420880400844228286e-01,
    5.40397917702171048937e-01,
    7.18286544141962662868e-02,
    1.26171219808761642112e-01,
    1.36370839120290507362e-02,
    1.19844998467991074170e-02,
])

# erfc(x) = exp(-x^2 - 0.5625 + P(1/x^2) / Q(1/x^2)) / x on [1.25, 1/0.35)
MID_NUM = Polynomial([
    -9.86494403484714822705e-03,
    -6.93858572707181764372e-01,
    -1.05586262253232909814e01,
    -6.23753324503260060396e01,
    -1.62396669462573470355e02,
    -1.84605092906711035994e02,
    -8.12874355063065934246e01,
    -9.81432934416914548592e00,
])
MID_DEN = Polynomial([
    1.0,
    1.96512716674392571292e01,
    1.37657754143519042600e02,
    4.34565877475229228821e02,
    6.45387271733267880336e02,
    4.29008140027567833386e02,
    1.08635005541779435134e02,
    6.57024977031928170135e00,
    -6.04244152148580987438e-02,
])

# same form on [1/0.35, 6)
TAIL_NUM = Polynomial([
    -9.86494292470009928597e-03,
    -7.99283237680523006574e-01,
    -1.77579549177547519889e01,
    -1.60636384855821916062e02,
    -6.37566443368389627722e02,
    -1.02509513161107724954e03,
    -4.83519191608651397019e02,
])
TAIL_DEN = Polynomial([
    1.0,
    3.03380607434824582924e01,
    3.25792512996573918826e02,
    1.53672958608443695994e03,
    3.19985821950859553908e03,
    2.55305040643316442583e03,
    4.74528541206955367215e02,
    -2.24409524465858183362e01,
])

# lower edges of the tiny, small, near-one, mid and tail bins; erf is 1 to double precision from 6 on
BIN_EDGES = np.array([2**-28, 0.84375, 1.25, 1 / 0.35, 6.0])


def _erfc_asymptotic(x: np.ndarray, num: Polynomial, den: Polynomial) -> np.ndarray:
    z = x * x
    s = 1 / z
    return np.exp(-z - 0.5625 + num(s) / den(s)) / x


def _erf_non_negative(a: np.ndarray) -> np.ndarray:
    bins = np.searchsorted(BIN_EDGES, a, side='right')
    out = np.ones_like(a)
    pieces = [
        lambda x: (1 + EFX) * x,
        lambda x: x + x * SMALL_NUM(x * x) / SMALL_DEN(x * x),
        lambda x: ERX + NEAR_ONE_NUM(x - 1) / NEAR_ONE_DEN(x - 1),
        lambda x: 1 - _erfc_asymptotic(x, MID_NUM, MID_DEN),
        lambda x: 1 - _erfc_asymptotic(x, TAIL_NUM, TAIL_DEN),
    ]
    for index, piece in enumerate(pieces):
        selected = bins == index
        if selected.any():
            out[selected] = piece(a[selected])
    return out


def erf(x):
    """error function of a scalar or array, absolute error below 1e-15; NaN propagates"""
    values = np.asarray(x, dtype=float)
    flat = values.ravel()
    magnitude = np.abs(flat)
    out = np.full_like(flat, np.nan)
    finite = ~np.isnan(magnitude)
    out[finite] = _erf_non_negative(magnitude[finite])
    result = (np.sign(flat) * out).reshape(values.shape)
    if result.ndim == 0:
        return float(result)
    return result


def erf_derivative(x):
    """d erf / dx = 2 / sqrt(pi) exp(-x^2)"""
    return 2 / np.sqrt(np.pi) * np.exp(-np.square(x))
