import logging

import pytest

from fock.params import DomainError
from utils import log_or_exception, parse_grid, squeezing_db


def test_parse_grid():
    assert parse_grid('0.1:0.5:5') == pytest.approx([0.1, 0.2, 0.3, 0.4, 0.5])
    assert parse_grid('0.3:0.3:1') == [0.3]
    assert len(parse_grid('0.05:0.9:50')) == 50


@pytest.mark.parametrize('spec', ['0.1:0.5', '0.1:0.5:x', '0.5:0.1:3', '0.1:0.5:0', ''])
def test_parse_grid_rejects(spec):
    with pytest.raises(DomainError):
        parse_grid(spec)


def test_squeezing_db():
    assert squeezing_db(0) == 0
    # lambda = tanh r, so the dB value is 20 r log10(e)
    assert squeezing_db(0.772) == pytest.approx(8.9, abs=0.05)
    assert squeezing_db(0.78) == pytest.approx(9.1, abs=0.1)
    assert squeezing_db(0.88) == pytest.approx(11.9, abs=0.1)
    with pytest.raises(DomainError):
        squeezing_db(1.0)


def test_log_or_exception(caplog):
    with caplog.at_level(logging.WARNING):
        log_or_exception(False, 'just a warning')
    assert 'just a warning' in caplog.text
    with pytest.raises(DomainError):
        log_or_exception(True, 'fatal', exc_class=DomainError)
