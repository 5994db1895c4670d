"""
Report writers for HarmoniTree campaigns.

JSON-lines is the canonical format; CSV carries the same fields in the same order.
"""

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, List

from ..models.campaign import CampaignRecord


def record_line(record: CampaignRecord, timings: bool = False) -> str:
    """One JSON-lines row in dataclass field order."""
    return json.dumps(record.to_dict(timings), separators=(',', ':'))


def write_jsonl(records: Iterable[CampaignRecord], stream, timings: bool = False):
    for record in records:
        stream.write(record_line(record, timings) + '\n')


def _csv_value(name: str, value):
    if value is None:
        return ''
    if name == 'failed_checks':
        return ';'.join(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value


def write_csv(records: Iterable[CampaignRecord], stream, timings: bool = False):
    names = CampaignRecord.field_names(timings)
    writer = csv.DictWriter(stream, fieldnames=names, lineterminator='\n')
    writer.writeheader()
    for record in records:
        data = record.to_dict(timings)
        writer.writerow({name: _csv_value(name, data[name]) for name in names})


def render_report(records: List[CampaignRecord], fmt: str = 'jsonl', timings: bool = False) -> str:
    buffer = io.StringIO()
    if fmt == 'csv':
        write_csv(records, buffer, timings)
    else:
        write_jsonl(records, buffer, timings)
    return buffer.getvalue()


def write_report(records: List[CampaignRecord], path: str = None, fmt: str = 'jsonl',
                 timings: bool = False) -> bool:
    """
    Write a report to path, or to stdout when path is None.

    Returns:
        True if the report was written, False otherwise
    """
    text = render_report(records, fmt, timings)
    if path is None:
        sys.stdout.write(text)
        return True
    try:
        target = Path(path)
        if target.parent and not target.parent.exists():
            target.parent.mkdir(parents=True, exist_ok=True)
        # newline='' keeps line endings identical on every platform
        with target.open('w', encoding='utf-8', newline='') as f:
            f.write(text)
        logging.info(f"Report written to {target}")
        return True
    except OSError as e:
        logging.error(f"Error writing report {path}: {e}")
        return False


def format_failure(record: CampaignRecord) -> str:
    """Verbatim counterexample dump for a failing record."""
    return f"FAIL {record.tree_code} [{', '.join(record.failed_checks)}] {record_line(record, True)}"
