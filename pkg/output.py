import click
import csv
import io
import json
import logging
from typing import Any, Iterable, Optional

from constants import SWEEP_CSV_HEADER


def format_number(value: Optional[float], digits: int = 15) -> str:
    """fixed significant-digit rendering; unavailable values become empty cells"""
    if value is None:
        return ''
    return format(float(value), f'.{digits}g')


def csv_text(header: list[str], rows: Iterable[Iterable[Any]], digits: int = 15) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([cell if isinstance(cell, str) else format_number(cell, digits) for cell in row])
    return buffer.getvalue()


def sweep_csv(records: list, digits: int = 15) -> str:
    return csv_text(SWEEP_CSV_HEADER, ([r.lambda_, r.value_sq, r.value_pure, r.value_mixed] for r in records), digits)


def json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2) + '\n'


def emit(text: str, out: Optional[str] = None):
    """write `text` to `out`, or to stdout when no path is given"""
    if out is None:
        click.echo(text, nl=False)
        return
    with open(out, 'w') as file:
        file.write(text)
    logging.info(f'Wrote {out}')
