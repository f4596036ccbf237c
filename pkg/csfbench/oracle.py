"""Brute-force ground truth for chromatic symmetric functions.

``csf_oracle`` expands X_G = sum over edge subsets S of (-1)^|S| p_lambda(S),
lambda(S) being the component sizes of (V, S), and converts to the e-basis.
Subsets are enumerated depth first over the edges in sorted order with a
rollback union-find. When the next edge joins two vertices that are already
connected, including it or not gives the same components with opposite
signs, so that whole subtree sums to zero and is skipped.

``chromatic_poly`` is an independent second oracle by deletion-contraction.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import logging
from math import ceil, log2, perm
from typing import Iterator

import networkx as nx

from .graphs import Graph, Node, underlying
from .oracle_cache import OracleCache, ResourceGuard
from .symfunc import SymFuncE, SymFuncP, p_to_e

logger = logging.getLogger(__name__)

ComponentCounts = dict[tuple[int, ...], int]

_default_cache = OracleCache()
_default_guard = ResourceGuard()
_default_workers = 1


def configure_oracle(
    *,
    cache: OracleCache | None = None,
    guard: ResourceGuard | None = None,
    workers: int | None = None,
) -> None:
    """Replace the process-wide defaults used when callers pass nothing."""

    global _default_cache, _default_guard, _default_workers
    if cache is not None:
        _default_cache = cache
    if guard is not None:
        _default_guard = guard
    if workers is not None:
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        _default_workers = workers


def default_cache() -> OracleCache:
    return _default_cache


def default_guard() -> ResourceGuard:
    return _default_guard


class _RollbackForest:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union_roots(self, ru: int, rv: int) -> tuple[int, int]:
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        return ru, rv

    def undo(self, ru: int, rv: int) -> None:
        self.parent[rv] = rv
        self.size[ru] -= self.size[rv]

    def component_sizes(self) -> tuple[int, ...]:
        return tuple(sorted((self.size[v] for v in range(len(self.parent)) if self.parent[v] == v), reverse=True))


def _subtree_counts(n: int, edges: tuple[tuple[int, int], ...], prefix: tuple[bool, ...]) -> ComponentCounts:
    """Signed component-partition counts over all subsets extending ``prefix``.

    ``prefix[i]`` fixes whether edge i is taken. Top level so it pickles for
    worker processes.
    """

    forest = _RollbackForest(n)
    sign = 1
    for (u, v), take in zip(edges, prefix):
        ru, rv = forest.find(u), forest.find(v)
        if ru == rv:
            return {}
        if take:
            forest.union_roots(ru, rv)
            sign = -sign

    counts: ComponentCounts = defaultdict(int)
    m = len(edges)

    def walk(i: int, s: int) -> None:
        if i == m:
            counts[forest.component_sizes()] += s
            return
        u, v = edges[i]
        ru, rv = forest.find(u), forest.find(v)
        if ru == rv:
            return
        walk(i + 1, s)
        big, small = forest.union_roots(ru, rv)
        walk(i + 1, -s)
        forest.undo(big, small)

    walk(len(prefix), sign)
    return {k: v for k, v in counts.items() if v}


def _prefixes(depth: int) -> Iterator[tuple[bool, ...]]:
    for mask in range(1 << depth):
        yield tuple(bool(mask >> (depth - 1 - i) & 1) for i in range(depth))


def _merge(total: ComponentCounts, part: ComponentCounts) -> None:
    for key, value in part.items():
        total[key] = total.get(key, 0) + value


def power_sum_expansion(graph: Graph, *, workers: int = 1) -> SymFuncP:
    """X_G in the p-basis."""

    edges = tuple(graph.sorted_edges())
    if workers <= 1 or len(edges) < 4:
        counts = _subtree_counts(graph.n, edges, ())
    else:
        depth = min(len(edges) - 1, max(1, ceil(log2(workers * 4))))
        prefixes = list(_prefixes(depth))
        counts = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves submission order, so the merge order is fixed
            for part in pool.map(_subtree_counts, [graph.n] * len(prefixes), [edges] * len(prefixes), prefixes):
                _merge(counts, part)
    return SymFuncP(graph.n, {k: Fraction(v) for k, v in counts.items() if v})


def csf_oracle(
    node: Node,
    *,
    workers: int | None = None,
    cache: OracleCache | None = None,
    guard: ResourceGuard | None = None,
) -> SymFuncE:
    """Exact e-basis expansion of X_G; roots of a node graph are ignored."""

    graph = underlying(node)
    guard = guard or _default_guard
    cache = cache if cache is not None else _default_cache
    workers = workers or _default_workers

    guard.check_edges(graph)
    cached = cache.get(graph)
    if cached is not None:
        return cached

    result = p_to_e(power_sum_expansion(graph, workers=workers))
    result.assert_integral()
    cache.put(graph, result)
    return result


def _components(graph: Graph) -> list[Graph]:
    g = graph.to_networkx()
    parts = []
    for comp in nx.connected_components(g):
        order = sorted(comp)
        index = {v: i for i, v in enumerate(order)}
        parts.append(Graph(len(order), frozenset((index[u], index[v]) for u, v in g.subgraph(order).edges)))
    return parts


def _contract(graph: Graph, keep: int, gone: int) -> Graph:
    """Merge ``gone`` into ``keep`` and drop parallel edges."""

    edges = set()
    for u, v in graph.edges:
        u = keep if u == gone else u
        v = keep if v == gone else v
        if u != v:
            edges.add((min(u, v), max(u, v)))
    merged = Graph(graph.n, frozenset(edges))
    return merged.without_vertex(gone)


def _count(graph: Graph, k: int, memo: dict[str, int]) -> int:
    n = graph.n
    if n == 0:
        return 1
    key = graph.key()
    hit = memo.get(key)
    if hit is not None:
        return hit

    adj = graph.adjacency()
    if graph.edge_count == n * (n - 1) // 2:
        value = perm(k, n) if k >= n else 0
    elif any(not nbrs for nbrs in adj.values()):
        isolated = next(v for v, nbrs in adj.items() if not nbrs)
        value = k * _count(graph.without_vertex(isolated), k, memo)
    elif not nx.is_connected(graph.to_networkx()):
        value = 1
        for comp in _components(graph):
            value *= _count(comp, k, memo)
    elif any(len(nbrs) == 1 for nbrs in adj.values()):
        leaf = next(v for v, nbrs in adj.items() if len(nbrs) == 1)
        value = (k - 1) * _count(graph.without_vertex(leaf), k, memo)
    elif 2 * graph.edge_count > n * (n - 1) // 2:
        # dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv
        u, v = next((u, v) for u in range(n) for v in range(u + 1, n) if v not in adj[u])
        value = _count(graph.with_edges([(u, v)]), k, memo) + _count(_contract(graph, u, v), k, memo)
    else:
        v = min(range(n), key=lambda x: (len(adj[x]), x))
        w = min(adj[v])
        value = _count(graph.without_edges([(v, w)]), k, memo) - _count(_contract(graph, min(v, w), max(v, w)), k, memo)

    memo[key] = value
    return value


def chromatic_poly(node: Node, k: int, *, guard: ResourceGuard | None = None) -> int:
    """Number of proper colorings with k colors."""

    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    graph = underlying(node)
    (guard or _default_guard).check_vertices(graph)
    return _count(graph, k, {})
