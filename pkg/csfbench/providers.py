"""Providers for the recurring subexpressions of the reduction formulas.

A tail provider maps t to X_{G^t} for a fixed rooted node G; a bridge
provider maps k to X_{P^k(G,H)}. Oracle providers build the graph and call
the memoized oracle. Closed-form providers cover paths rooted at an end,
cliques and cycles from the closed e_I-expansions with no oracle call.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Protocol

import networkx as nx

from .expansions import lollipop_eI, path_eI, tadpole_eI
from .graphs import Node, RootedGraph, path_conjoin, tailed, underlying
from .oracle import csf_oracle
from .symfunc import SymFuncE

CsfFn = Callable[[Node], SymFuncE]


class TailProvider(Protocol):
    def __call__(self, t: int) -> SymFuncE: ...


class BridgeProvider(Protocol):
    def __call__(self, k: int) -> SymFuncE: ...


@lru_cache(maxsize=None)
def path_sf(n: int) -> SymFuncE:
    """X_{P_n}, with X_{P_0} = 1."""

    if n < 0:
        raise ValueError(f"path order must be >= 0, got {n}")
    if n == 0:
        return SymFuncE.one()
    return path_eI(n).flatten()


@lru_cache(maxsize=None)
def cycle_sf(n: int) -> SymFuncE:
    """X_{C_n} for n >= 2 (C_2 is an edge)."""

    return tadpole_eI(n, 0).flatten()


@lru_cache(maxsize=None)
def lollipop_sf(m: int, l: int) -> SymFuncE:
    """X_{K_m^l}."""

    return lollipop_eI(m, m + l).flatten()


def _check_length(t: int) -> None:
    if t < 0:
        raise ValueError(f"tail length must be >= 0, got {t}")


@dataclass(frozen=True)
class PathTails:
    """Tails of P_order rooted at an end: X_{P_{order+t}}. order=1 is K_1."""

    order: int = 1

    def __call__(self, t: int) -> SymFuncE:
        _check_length(t)
        return path_sf(self.order + t)


@dataclass(frozen=True)
class CliqueTails:
    m: int

    def __call__(self, t: int) -> SymFuncE:
        _check_length(t)
        return lollipop_sf(self.m, t)


@dataclass(frozen=True)
class CycleTails:
    m: int

    def __call__(self, t: int) -> SymFuncE:
        _check_length(t)
        return tadpole_eI(self.m + t, t).flatten()


@dataclass(frozen=True)
class OracleTails:
    node: Node
    csf: CsfFn = csf_oracle

    def __call__(self, t: int) -> SymFuncE:
        _check_length(t)
        return self.csf(tailed(self.node, t))


@dataclass(frozen=True)
class OracleBridges:
    left: Node
    right: Node
    csf: CsfFn = csf_oracle

    def __call__(self, k: int) -> SymFuncE:
        _check_length(k)
        return self.csf(path_conjoin(self.left, self.right, k))


@dataclass(frozen=True)
class ShiftedBridges:
    """P^k(P_p, H) = H^{k+p-1} when P_p is rooted at an end."""

    tails: TailProvider
    shift: int = 0

    def __call__(self, k: int) -> SymFuncE:
        _check_length(k)
        return self.tails(k + self.shift)


def node_kind(node: Node) -> tuple[str, int]:
    """Classify a node as ``("path", n)``, ``("clique", n)``, ``("cycle", n)`` or ``("other", n)``.

    A path counts only when rooted at an end; cliques and cycles are
    vertex-transitive so any root works.
    """

    graph = underlying(node)
    n = graph.n
    root = node.root if isinstance(node, RootedGraph) else 0
    if n == 0:
        return "other", n
    g = graph.to_networkx()
    if n <= 2 and graph.edge_count == n - 1:
        return "path", n
    if nx.is_connected(g):
        degrees = dict(g.degree())
        if graph.edge_count == n - 1 and max(degrees.values()) <= 2 and degrees[root] <= 1:
            return "path", n
        if graph.edge_count == n * (n - 1) // 2:
            return "clique", n
        if n >= 3 and graph.edge_count == n and all(d == 2 for d in degrees.values()):
            return "cycle", n
    return "other", n


def tails_for(node: Node, *, closed_form: bool = True, csf: CsfFn = csf_oracle) -> TailProvider:
    if closed_form:
        kind, n = node_kind(node)
        if kind == "path":
            return PathTails(n)
        if kind == "clique":
            return CliqueTails(n)
        if kind == "cycle":
            return CycleTails(n)
    return OracleTails(node, csf)


def bridges_for(left: Node, right: Node, *, closed_form: bool = True, csf: CsfFn = csf_oracle) -> BridgeProvider:
    if closed_form:
        kind, n = node_kind(left)
        if kind == "path":
            return ShiftedBridges(tails_for(right, csf=csf), n - 1)
        kind, n = node_kind(right)
        if kind == "path":
            return ShiftedBridges(tails_for(left, csf=csf), n - 1)
    return OracleBridges(left, right, csf)
