"""Simple graphs, rooted node graphs and the conjoining operations.

Vertices are ``0..n-1``. Conjoined graphs number the node graphs first in
argument order, then any new vertices (a spider center, then path internal
vertices). A link of length 0 identifies its two endpoints; identified
vertices keep the smallest label and labels are compacted afterwards.
Plain graphs used as nodes are rooted at vertex 0: the end of a path, a
vertex of a clique or cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence, Union

import networkx as nx
from networkx.utils import UnionFind

Edge = tuple[int, int]


class GraphConstructionError(ValueError):
    """An identification would create a loop or a multi-edge."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise GraphConstructionError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for {self.n} vertices")
            normed.add(_norm(int(u), int(v)))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        edge_list = [tuple(e) for e in edges]
        normed = [_norm(u, v) for u, v in edge_list]
        if len(set(normed)) != len(normed):
            raise GraphConstructionError("duplicate edge in edge list")
        return cls(n, frozenset(normed))

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def key(self) -> str:
        """Canonical serialization of the labelled graph."""

        return f"{self.n}:" + ";".join(f"{u}-{v}" for u, v in self.sorted_edges())

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(w for e in self.edges if v in e for w in e if w != v)

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        extra = {_norm(u, v) for u, v in extra}
        clash = extra & self.edges
        if clash:
            raise GraphConstructionError(f"edges already present: {sorted(clash)}")
        return Graph(self.n, self.edges | extra)

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        removed = {_norm(u, v) for u, v in removed}
        return Graph(self.n, self.edges - removed)

    def without_vertex(self, x: int) -> Graph:
        """Delete x; vertices above x shift down by one."""

        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} out of range")

        def shift(v: int) -> int:
            return v - 1 if v > x else v

        return Graph(self.n - 1, frozenset((shift(u), shift(v)) for u, v in self.edges if x not in (u, v)))

    def disjoint_union(self, other: Graph) -> Graph:
        shifted = {(u + self.n, v + self.n) for u, v in other.edges}
        return Graph(self.n + other.n, self.edges | shifted)

    def with_isolated_vertex(self) -> Graph:
        return Graph(self.n + 1, self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def to_json(self, roots: Sequence[int] = ()) -> dict[str, Any]:
        payload: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}
        if roots:
            payload["roots"] = list(roots)
        return payload


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} out of range for {self.graph.n} vertices")

    @property
    def n(self) -> int:
        return self.graph.n

    def to_json(self) -> dict[str, Any]:
        return self.graph.to_json((self.root,))


@dataclass(frozen=True)
class DoubleRootedGraph:
    graph: Graph
    roots: tuple[int, int] = (0, 1)

    def __post_init__(self) -> None:
        u, v = self.roots
        if u == v:
            raise ValueError(f"roots must be distinct, got {self.roots}")
        for r in (u, v):
            if not 0 <= r < self.graph.n:
                raise ValueError(f"root {r} out of range for {self.graph.n} vertices")

    @property
    def n(self) -> int:
        return self.graph.n

    def to_json(self) -> dict[str, Any]:
        return self.graph.to_json(self.roots)


Node = Union[Graph, RootedGraph, DoubleRootedGraph]


def graph_from_json(payload: Mapping[str, Any]) -> Node:
    """Inverse of ``to_json``: zero, one or two roots pick the node type."""

    try:
        n = int(payload["n"])
        edges = [tuple(int(x) for x in e) for e in payload["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph payload: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise ValueError("every edge must have two endpoints")
    graph = Graph.from_edges(n, edges)
    roots = list(payload.get("roots") or [])
    if len(roots) == 0:
        return graph
    if len(roots) == 1:
        return RootedGraph(graph, int(roots[0]))
    if len(roots) == 2:
        return DoubleRootedGraph(graph, (int(roots[0]), int(roots[1])))
    raise ValueError(f"at most two roots are supported, got {len(roots)}")


def underlying(node: Node) -> Graph:
    return node if isinstance(node, Graph) else node.graph


def _end_roots(node: Node) -> tuple[int, int]:
    if isinstance(node, Graph):
        return 0, 0
    if isinstance(node, RootedGraph):
        return node.root, node.root
    return node.roots


class _Assembler:
    """Collects node graphs, new vertices, links and identifications."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[Edge] = []
        self.identified: list[Edge] = []

    def add_graph(self, graph: Graph) -> int:
        offset = self.n
        self.edges.extend((u + offset, v + offset) for u, v in graph.edges)
        self.n += graph.n
        return offset

    def new_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def link(self, u: int, v: int, length: int) -> None:
        if length < 0:
            raise ValueError(f"path length must be >= 0, got {length}")
        if length == 0:
            self.identified.append((u, v))
            return
        prev = u
        for _ in range(length - 1):
            mid = self.new_vertex()
            self.edges.append((prev, mid))
            prev = mid
        self.edges.append((prev, v))

    def build(self) -> tuple[Graph, list[int]]:
        uf = UnionFind(range(self.n))
        for u, v in self.identified:
            uf.union(u, v)
        rep = {v: min(group) for group in uf.to_sets() for v in group}
        labels = {r: i for i, r in enumerate(sorted(set(rep.values())))}
        vertex_map = [labels[rep[v]] for v in range(self.n)]
        seen: set[Edge] = set()
        for u, v in self.edges:
            a, b = vertex_map[u], vertex_map[v]
            if a == b:
                raise GraphConstructionError(f"identification turns edge ({u},{v}) into a loop")
            e = _norm(a, b)
            if e in seen:
                raise GraphConstructionError(f"identification creates a multi-edge at {e}")
            seen.add(e)
        return Graph(len(labels), frozenset(seen)), vertex_map


# --- standard graphs ---


def clique(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"clique needs n >= 1, got {n}")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """C_n; C_2 is its underlying simple graph, a single edge."""

    if n < 2:
        raise ValueError(f"cycle needs n >= 2, got {n}")
    if n == 2:
        return path_graph(2)
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def spider(parts: Iterable[int]) -> Graph:
    """S(I) built directly: center 0, then each leg outward."""

    legs = list(parts)
    if any(p < 0 for p in legs):
        raise ValueError(f"spider legs must be >= 0, got {legs}")
    edges: list[Edge] = []
    n = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
    return Graph(n, frozenset(edges))


# --- conjoining ---


def _path_conjoin(g: Node, h: Node, k: int) -> tuple[Graph, list[int], int, int]:
    asm = _Assembler()
    og = asm.add_graph(underlying(g))
    oh = asm.add_graph(underlying(h))
    u = og + _end_roots(g)[1]
    v = oh + _end_roots(h)[0]
    asm.link(u, v, k)
    graph, vmap = asm.build()
    return graph, vmap, og, oh


def path_conjoin(g: Node, h: Node, k: int) -> Graph:
    """P^k(G,H): a path of length k from the root of G to the root of H."""

    return _path_conjoin(g, h, k)[0]


def tailed(g: Node, k: int) -> RootedGraph:
    """G^k = P^k(G, K_1), rooted at the free end of the tail."""

    graph, vmap, _, oh = _path_conjoin(g, clique(1), k)
    return RootedGraph(graph, vmap[oh])


def centered_spider_conjoin(tau: Sequence[int], nodes: Sequence[Node]) -> RootedGraph:
    """S^tau(G_1..G_l) rooted at its center.

    Leg i has length tau_i and ends at the root of G_i.
    """

    if len(tau) != len(nodes):
        raise ValueError(f"tau has {len(tau)} legs but {len(nodes)} nodes were given")
    if not tau:
        raise ValueError("a spider needs at least one leg")
    asm = _Assembler()
    offsets = [asm.add_graph(underlying(node)) for node in nodes]
    center = asm.new_vertex()
    for length, node, offset in zip(tau, nodes, offsets):
        asm.link(center, offset + _end_roots(node)[0], length)
    graph, vmap = asm.build()
    return RootedGraph(graph, vmap[center])


def spider_conjoin(tau: Sequence[int], nodes: Sequence[Node]) -> Graph:
    return centered_spider_conjoin(tau, nodes).graph


def chain_conjoin(tau: Sequence[int], nodes: Sequence[Node]) -> Graph:
    """C^tau(G_0..G_l): a path of length tau_i links v_i and u_{i+1}.

    A single-rooted node uses its root on both sides, so the unused roots of
    the end nodes need not exist.
    """

    if len(nodes) < 2 or len(tau) != len(nodes) - 1:
        raise ValueError(f"chain needs len(tau) = len(nodes) - 1 >= 1, got {len(tau)} and {len(nodes)}")
    asm = _Assembler()
    offsets = [asm.add_graph(underlying(node)) for node in nodes]
    for i, length in enumerate(tau):
        v = offsets[i] + _end_roots(nodes[i])[1]
        u = offsets[i + 1] + _end_roots(nodes[i + 1])[0]
        asm.link(v, u, length)
    return asm.build()[0]


def kchain(gamma: Sequence[int]) -> Graph:
    """K_{gamma_1} + ... + K_{gamma_l}, consecutive cliques sharing one vertex."""

    parts = list(gamma)
    if not parts or any(p < 2 for p in parts):
        raise ValueError(f"K-chain parts must be >= 2, got {parts}")
    if len(parts) == 1:
        return clique(parts[0])
    nodes = [DoubleRootedGraph(clique(p), (0, 1)) for p in parts]
    return chain_conjoin([0] * (len(parts) - 1), nodes)


# --- named families ---


def lollipop(m: int, l: int) -> Graph:
    """K_m^l."""

    if m < 1 or l < 0:
        raise ValueError(f"lollipop needs m >= 1 and l >= 0, got m={m}, l={l}")
    return tailed(clique(m), l).graph


def tadpole(m: int, l: int) -> Graph:
    """C_m^l."""

    if m < 2 or l < 0:
        raise ValueError(f"tadpole needs m >= 2 and l >= 0, got m={m}, l={l}")
    return tailed(cycle(m), l).graph


def pineapple(g: int, h: int, m: int) -> Graph:
    """K_m with pendant paths of lengths g and h at one vertex."""

    if m < 1 or g < 0 or h < 0:
        raise ValueError(f"pineapple needs m >= 1 and g, h >= 0, got g={g}, h={h}, m={m}")
    return spider_conjoin((0, g, h), (clique(m), clique(1), clique(1)))


def rooted_cycle(m: int, *, adjacent: bool = True) -> DoubleRootedGraph:
    if adjacent:
        return DoubleRootedGraph(cycle(m), (0, 1))
    if m < 4:
        raise ValueError(f"non-adjacent roots need a cycle of size >= 4, got {m}")
    return DoubleRootedGraph(cycle(m), (0, 2))


def hat(g: int, m: int, h: int, *, adjacent: bool = True) -> Graph:
    """C^{gh}(K_1, C_m, K_1); a hat graph when the roots are adjacent."""

    return chain_conjoin((g, h), (clique(1), rooted_cycle(m, adjacent=adjacent), clique(1)))


def hat_chain(ms: Sequence[int], taus: Sequence[int]) -> Graph:
    """Cycles with adjacent roots chained by paths, with a tail at each end."""

    if not ms:
        raise ValueError("hat-chain needs at least one cycle")
    if len(taus) != len(ms) + 1:
        raise ValueError(f"hat-chain needs len(taus) = len(ms) + 1, got {len(taus)} and {len(ms)}")
    if any(m < 2 for m in ms) or any(t < 0 for t in taus):
        raise ValueError(f"hat-chain needs cycle sizes >= 2 and lengths >= 0, got ms={ms}, taus={taus}")
    nodes: list[Node] = [clique(1), *(rooted_cycle(m) for m in ms), clique(1)]
    return chain_conjoin(taus, nodes)


def kayak(g: int, h: int, k: int) -> Graph:
    """Kayak paddle P^k(C_g, C_h)."""

    if g < 3 or h < 3 or k < 1:
        raise ValueError(f"kayak paddle needs g, h >= 3 and k >= 1, got g={g}, h={h}, k={k}")
    return path_conjoin(cycle(g), cycle(h), k)


def kpc(a: int, b: int, c: int) -> Graph:
    """P^b(K_a, C_c), of order a+b+c-1."""

    if a < 1 or b < 0 or c < 2:
        raise ValueError(f"KPC needs a >= 1, b >= 0, c >= 2, got a={a}, b={b}, c={c}")
    return path_conjoin(clique(a), cycle(c), b)


def pkp(g: int, h: int, m: int) -> Graph:
    """K_m^{gh}(K_1, K_1): a clique with tails g and h at two distinct vertices."""

    if m < 2 or g < 0 or h < 0:
        raise ValueError(f"PKP needs m >= 2 and g, h >= 0, got g={g}, h={h}, m={m}")
    return chain_conjoin((g, h), (clique(1), DoubleRootedGraph(clique(m), (0, 1)), clique(1)))


def kkp(a: int, b: int, c: int) -> Graph:
    """K_{b+1}^{0a}(K_c, K_1), of order a+b+c."""

    if a < 0 or b < 1 or c < 1:
        raise ValueError(f"KKP needs a >= 0, b >= 1, c >= 1, got a={a}, b={b}, c={c}")
    return chain_conjoin((0, a), (clique(c), DoubleRootedGraph(clique(b + 1), (0, 1)), clique(1)))


def kgh(g: int, h: int, m: int, left: Node, right: Node) -> Graph:
    """K_m^{gh}(G, H)."""

    if m < 2 or g < 0 or h < 0:
        raise ValueError(f"K_m^(gh) needs m >= 2 and g, h >= 0, got g={g}, h={h}, m={m}")
    return chain_conjoin((g, h), (left, DoubleRootedGraph(clique(m), (0, 1)), right))


def gch(g: int, h: int, m: int, left: Node, right: Node) -> Graph:
    """C_m^{gh}(G, H) with adjacent cycle roots."""

    if m < 2 or g < 0 or h < 0:
        raise ValueError(f"C_m^(gh) needs m >= 2 and g, h >= 0, got g={g}, h={h}, m={m}")
    return chain_conjoin((g, h), (left, rooted_cycle(m), right))
