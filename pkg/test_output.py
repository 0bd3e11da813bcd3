import json

from output import csv_text, emit, format_number, json_text, sweep_csv
from sweep.grid import SweepRecord


def test_format_number():
    assert format_number(None) == ''
    assert format_number(0.1) == '0.1'
    assert format_number(1 / 3) == '0.333333333333333'
    assert format_number(2.0) == '2'


def test_sweep_csv_schema():
    records = [SweepRecord(0.0, 'fidelity', value_sq=0.5), SweepRecord(0.5, 'fidelity', 0.75, 0.8, 0.79)]
    lines = sweep_csv(records).splitlines()
    assert lines[0] == 'lambda,value_sq,value_pure,value_mixed'
    assert lines[1] == '0,0.5,,'
    assert lines[2] == '0.5,0.75,0.8,0.79'


def test_csv_keeps_strings():
    assert csv_text(['case', 'value'], [['mixed', 1.5]]) == 'case,value\nmixed,1.5\n'


def test_json_nulls():
    assert json.loads(json_text([SweepRecord(0.0, 'neg').to_dict()])) == [{'lambda': 0.0, 'value_sq': None, 'value_pure': None, 'value_mixed': None}]


def test_emit_to_file(tmp_path):
    path = tmp_path / 'out.csv'
    emit('a,b\n', str(path))
    assert path.read_text() == 'a,b\n'
