from __future__ import annotations

from dataclasses import dataclass, field
import json
import logging
from pathlib import Path
import threading

from .graphs import Graph
from .symfunc import SymFuncE, symfunc_from_json

logger = logging.getLogger(__name__)

CACHE_FILENAME = "csf_cache.jsonl"


class ResourceGuardError(RuntimeError):
    """An oracle input exceeds the configured size guard."""


@dataclass(frozen=True)
class ResourceGuard:
    """Size limits for the brute-force oracles."""

    max_edges: int = 30
    max_poly_vertices: int = 12

    def check_edges(self, graph: Graph) -> None:
        if graph.edge_count > self.max_edges:
            raise ResourceGuardError(
                f"graph has {graph.edge_count} edges; the oracle is limited to {self.max_edges}"
            )

    def check_vertices(self, graph: Graph) -> None:
        if graph.n > self.max_poly_vertices:
            raise ResourceGuardError(
                f"graph has {graph.n} vertices; chromatic_poly is limited to {self.max_poly_vertices}"
            )


@dataclass
class OracleCache:
    """Memo of oracle results keyed by ``Graph.key()``.

    Lookups and inserts take a lock. With ``cache_dir`` set, entries are
    appended to a JSON Lines file there and reloaded on construction.
    """

    cache_dir: Path | None = None
    hits: int = 0
    misses: int = 0
    _entries: dict[str, SymFuncE] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        if self.cache_dir is not None:
            self.cache_dir = Path(self.cache_dir)
            self._load()

    @property
    def path(self) -> Path | None:
        return None if self.cache_dir is None else self.cache_dir / CACHE_FILENAME

    def _load(self) -> None:
        path = self.path
        if path is None or not path.exists():
            return
        loaded = 0
        with path.open("r", encoding="utf-8") as f:
            for line_no, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    self._entries[record["key"]] = symfunc_from_json(record["csf"])
                except (json.JSONDecodeError, KeyError, ValueError) as exc:
                    logger.warning("skipping bad cache line %d in %s: %s", line_no, path, exc)
                    continue
                loaded += 1
        logger.debug("loaded %d cached oracle results from %s", loaded, path)

    def get(self, graph: Graph) -> SymFuncE | None:
        key = graph.key()
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
        logger.debug("oracle cache %s for %s", "miss" if value is None else "hit", key)
        return value

    def put(self, graph: Graph, value: SymFuncE) -> None:
        key = graph.key()
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = value
            path = self.path
            if path is not None:
                path.parent.mkdir(parents=True, exist_ok=True)
                with path.open("a", encoding="utf-8") as f:
                    f.write(json.dumps({"key": key, "csf": value.to_json()}, sort_keys=True))
                    f.write("\n")

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0
