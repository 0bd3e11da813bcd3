import numpy as np
import pytest

from constants import PAPER_CROSSINGS
from densecoding.channel import SignalParams
from densecoding.information import i_mixed, i_sq
from fock.params import DomainError, ModelParams

from .crossing import NoSignChange, crossover, dense_coding_limit_study, find_crossing, scan_bracket

WORKING_POINT = ModelParams(0.0, 0.9)


def cubic(x: float) -> float:
    return -(x - 0.2) * (x - 0.5) * (x - 0.8)


def zero(_x: float) -> float:
    return 0.0


def test_find_crossing_simple_root():
    result = find_crossing(lambda x: x * x, lambda x: 0.3, (0.0, 1.0), tol=1e-6)
    assert result.lambda_star == pytest.approx(0.3**0.5, abs=1e-6)
    assert result.residual < 1e-5
    assert result.bracket == (0.0, 1.0)
    assert 15 <= result.iterations <= 21


def test_find_crossing_exact_endpoint():
    result = find_crossing(lambda x: x, lambda x: 0.0, (0.0, 1.0))
    assert result.lambda_star == 0
    assert result.iterations == 0


def test_find_crossing_errors():
    with pytest.raises(NoSignChange):
        find_crossing(lambda x: x + 1, zero, (0.0, 1.0))
    with pytest.raises(NoSignChange):
        find_crossing(lambda x: float('nan'), zero, (0.0, 1.0))
    with pytest.raises(DomainError):
        find_crossing(cubic, zero, (0.9, 0.1))


def test_scan_bracket_takes_last_downward_crossing():
    lo, hi = scan_bracket(cubic, zero, 0.0, 1.0, points=40)
    assert lo < 0.8 < hi
    assert hi - lo == pytest.approx(1 / 39)
    assert find_crossing(cubic, zero, (lo, hi)).lambda_star == pytest.approx(0.8, abs=1e-4)


def test_scan_bracket_without_crossing():
    with pytest.raises(NoSignChange):
        scan_bracket(lambda x: x - 2, zero, 0.0, 1.0)


@pytest.mark.parametrize('case', ['pure', 'mixed'])
def test_fidelity_crossings(case):
    result = crossover('fidelity', case, WORKING_POINT)
    assert result.lambda_star == pytest.approx(PAPER_CROSSINGS['fidelity'][case], abs=0.005)


def test_fidelity_crossing_residual():
    result = crossover('fidelity', 'mixed', WORKING_POINT, bracket=(0.6, 0.8), tol=1e-9)
    assert 0.70 <= result.lambda_star <= 0.72
    assert result.residual < 1e-6


def test_crossover_needs_conditional_case():
    with pytest.raises(DomainError):
        crossover('fidelity', 'sq', WORKING_POINT)


def test_mixed_dense_coding_advantage_widens_at_small_beta():
    grid = np.linspace(0.05, 0.95, 40)

    def advantage(beta: float) -> int:
        signal = SignalParams(beta)
        return sum(i_mixed(WORKING_POINT.replace(lambda_=lam), signal) > i_sq(lam, beta) for lam in grid)

    assert advantage(1.5) <= advantage(0.7)


def test_dense_limit_study_validates_betas():
    with pytest.raises(DomainError):
        dense_coding_limit_study([0.1, 0.5], WORKING_POINT)
    with pytest.raises(DomainError):
        dense_coding_limit_study([0.5, 0.0], WORKING_POINT)
    with pytest.raises(DomainError):
        dense_coding_limit_study([], WORKING_POINT)


@pytest.mark.slow
@pytest.mark.parametrize('case', ['pure', 'mixed'])
def test_log_negativity_crossings(case):
    result = crossover('logneg', case, WORKING_POINT.replace(kmax=50))
    assert result.lambda_star == pytest.approx(PAPER_CROSSINGS['logneg'][case], abs=0.005)


@pytest.mark.slow
def test_fidelity_crosses_before_log_negativity():
    assert crossover('fidelity', 'pure', WORKING_POINT).lambda_star < crossover('logneg', 'pure', WORKING_POINT).lambda_star


@pytest.mark.slow
def test_dense_coding_limit():
    rows = dense_coding_limit_study([0.4, 0.2, 0.1, 0.05], WORKING_POINT)
    beta, pure, mixed = rows[-1]
    assert beta == 0.05
    assert pure == pytest.approx(PAPER_CROSSINGS['mutualinfo']['pure'], abs=0.01)
    assert mixed == pytest.approx(PAPER_CROSSINGS['mutualinfo']['mixed'], abs=0.01)
    for column in (1, 2):
        sequence = [row[column] for row in rows]
        assert None not in sequence
        steps = [abs(later - earlier) for earlier, later in zip(sequence, sequence[1:])]
        assert all(later < earlier for earlier, later in zip(steps, steps[1:]))
