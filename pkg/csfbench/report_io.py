from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Iterable, Iterator, TextIO

from .graphs import Node, graph_from_json


def load_graph(path: str | Path) -> Node:
    """Read a graph file: ``{"n": 3, "edges": [[0, 1], ...], "roots": [...]}``."""

    file_path = Path(path)
    try:
        payload = json.loads(file_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{file_path}: not valid JSON ({exc})") from exc
    if not isinstance(payload, dict):
        raise ValueError(f"{file_path}: expected a JSON object")
    return graph_from_json(payload)


def write_graph(path: str | Path, node: Node) -> None:
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(json.dumps(node.to_json(), sort_keys=True) + "\n", encoding="utf-8")


def dump_record(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True)


def write_jsonl(handle: TextIO, records: Iterable[dict[str, Any]]) -> None:
    for record in records:
        handle.write(dump_record(record))
        handle.write("\n")


def iter_jsonl(path: str | Path) -> Iterator[dict[str, Any]]:
    file_path = Path(path)
    with file_path.open("r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            yield json.loads(line)


def load_jsonl(path: str | Path) -> list[dict[str, Any]]:
    return list(iter_jsonl(path))


def _cell(value: Any) -> Any:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return value


def write_csv(handle: TextIO, rows: list[dict[str, Any]]) -> None:
    """One CSV table; nested values are embedded as JSON text."""

    fieldnames = sorted({k for row in rows for k in row.keys()})
    w = csv.DictWriter(handle, fieldnames=fieldnames, lineterminator="\n")
    w.writeheader()
    w.writerows({k: _cell(v) for k, v in row.items()} for row in rows)
