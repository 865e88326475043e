"""
Serialization of per-record results as JSON lines or TSV.

JSON: one object per record per line, INF as null.
TSV: arrays as 'position<TAB>value' lines (INF as 'inf'); scalar and
detector results as a single tab-separated line starting with the name.
"""

import json
from dataclasses import dataclass, field
from typing import List, Optional

from words import CmpArray, Period, PeriodArray

ARRAY_COMMANDS = ('rmp', 'lmp', 'cmp')


@dataclass
class RecordResult:
    """Everything one command produced for one input record."""

    name: str
    n: int
    command: str
    result: object
    k: Optional[int] = None
    s: Optional[int] = None
    witness: Optional[dict] = None
    stats: Optional[dict] = None
    dot: Optional[str] = None
    extra: dict = field(default_factory=dict)


def _result_json(result) -> object:
    if isinstance(result, (PeriodArray, CmpArray, Period)):
        return result.to_json()
    if hasattr(result, 'to_json'):
        return result.to_json()
    return result


def to_payload(record: RecordResult) -> dict:
    payload = {
        "name": record.name,
        "n": record.n,
        "k": record.k,
        "s": record.s,
        "command": record.command,
        "result": _result_json(record.result),
        "witness": record.witness,
    }
    if record.command in ARRAY_COMMANDS:
        payload[record.command] = payload["result"]
    if record.stats is not None:
        payload["stats"] = record.stats
    payload.update(record.extra)
    return payload


def format_json(records: List[RecordResult]) -> str:
    return ''.join(json.dumps(to_payload(record), ensure_ascii=False) + '\n' for record in records)


def _tsv_value(value) -> str:
    if value is None:
        return '-'
    return str(value)


def format_tsv(records: List[RecordResult]) -> str:
    lines = []
    multiple = len(records) > 1
    for record in records:
        result = record.result
        if isinstance(result, PeriodArray):
            if multiple:
                lines.append(f">{record.name}")
            lines.extend(f"{position}\t{entry}" for position, entry in enumerate(result.entries, start=1))
        elif isinstance(result, CmpArray):
            if multiple:
                lines.append(f">{record.name}")
            lines.extend(f"{index}\t{entry}" for index, entry in enumerate(result.entries))
        elif record.command == 'detect':
            verdict = result.to_json()
            witness = record.witness or {}
            lines.append('\t'.join([
                record.name,
                verdict["verdict"],
                verdict["classic"],
                verdict["form"],
                _tsv_value(witness.get("position")),
                _tsv_value(witness.get("x")),
            ]))
        else:
            lines.append(f"{record.name}\t{_tsv_value(result)}")
    return ''.join(line + '\n' for line in lines)


def format_dot(records: List[RecordResult]) -> str:
    return ''.join(record.dot for record in records if record.dot)


def render(records: List[RecordResult], output_format: str) -> str:
    """Serialize results; trees always render as DOT."""
    if records and all(record.dot is not None for record in records):
        return format_dot(records)
    if output_format == 'tsv':
        return format_tsv(records)
    return format_json(records)
