"""
Cli Table Writer
================

CSV (RFC 4180, floats at 17 significant digits) and JSON (array of
objects) output of homogeneous result rows.
"""

import csv
import io
import math
import sys
from numbers import Real
from pathlib import Path
from typing import Any, List, Mapping, Optional, Sequence

import orjson

from general.Common.helpers import format_float
from general.Error.error_manager import DomainError, OutputError
from general.Logging.logger_manager import get_logger
from .run_config import STDOUT, OutputFormat

logger = get_logger(__name__)


def _columns_of(rows: Sequence[Mapping[str, Any]], columns: Optional[Sequence[str]]) -> List[str]:
    keys = list(columns) if columns is not None else (list(rows[0].keys()) if rows else [])
    for index, row in enumerate(rows):
        if list(row.keys()) != keys:
            raise DomainError("rows are not homogeneous", {'row': index, 'expected': keys, 'found': list(row.keys())})
    return keys


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Real):
        return format_float(value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_table(rows: Sequence[Mapping[str, Any]], fmt: OutputFormat,
                 columns: Optional[Sequence[str]] = None) -> bytes:
    """Serialize rows; identical inputs give identical bytes."""
    keys = _columns_of(rows, columns)
    if OutputFormat(fmt) is OutputFormat.JSON:
        payload = [{key: _json_value(row[key]) for key in keys} for row in rows]
        return orjson.dumps(payload, option=orjson.OPT_SERIALIZE_NUMPY | orjson.OPT_APPEND_NEWLINE)

    buffer = io.StringIO(newline='')
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator='\r\n')
    writer.writerow(keys)
    for row in rows:
        writer.writerow([_csv_cell(row[key]) for key in keys])
    return buffer.getvalue().encode('utf-8')


def emit_table(rows: Sequence[Mapping[str, Any]], fmt: OutputFormat = OutputFormat.CSV,
               destination: str = STDOUT, columns: Optional[Sequence[str]] = None):
    """Write rows to a file path or to stdout ("-")."""
    data = render_table(rows, fmt, columns)
    try:
        if destination == STDOUT:
            stream = sys.stdout.buffer if hasattr(sys.stdout, 'buffer') else None
            if stream is not None:
                stream.write(data)
                stream.flush()
            else:
                sys.stdout.write(data.decode('utf-8'))
        else:
            Path(destination).write_bytes(data)
    except OSError as e:
        raise OutputError(f"cannot write table: {e}", {'destination': destination})
    logger.debug("table_written", rows=len(rows), format=OutputFormat(fmt).value, destination=destination)
