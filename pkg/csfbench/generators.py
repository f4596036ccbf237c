from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import random
from typing import Iterator

import networkx as nx

from .compositions import weak_compositions
from .graphs import Graph
from .registry import FamilySpec, get_family


@dataclass(frozen=True)
class InstanceConfig:
    trials: int = 50
    order: int = 7
    seed: int = 0
    edge_prob: float = 0.4
    # tribe sizes for arithmetic-progression instances
    min_tribe: int = 2
    max_tribe: int = 3


@dataclass(frozen=True)
class TripleInstance:
    graph: Graph
    triple: tuple[int, int, int]


@dataclass(frozen=True)
class ApInstance:
    graph: Graph
    tribe: tuple[int, ...]
    x: int
    mode: str


def _from_networkx(g: nx.Graph) -> Graph:
    return Graph(g.number_of_nodes(), frozenset((min(u, v), max(u, v)) for u, v in g.edges()))


def _stable_triples(graph: Graph) -> list[tuple[int, int, int]]:
    return [
        t
        for t in combinations(range(graph.n), 3)
        if not (graph.has_edge(t[0], t[1]) or graph.has_edge(t[1], t[2]) or graph.has_edge(t[0], t[2]))
    ]


def random_triple_instances(config: InstanceConfig) -> list[TripleInstance]:
    """Seeded G(n, p) graphs, each with one of its stable triples."""

    if config.order < 3:
        raise ValueError(f"triple deletion needs order >= 3, got {config.order}")
    out: list[TripleInstance] = []
    attempt = 0
    while len(out) < config.trials:
        rng = random.Random(config.seed * 1_000_003 + attempt)
        attempt += 1
        graph = _from_networkx(nx.gnp_random_graph(config.order, config.edge_prob, seed=rng.randrange(2**31)))
        triples = _stable_triples(graph)
        if not triples:
            continue
        out.append(TripleInstance(graph, rng.choice(triples)))
    return out


def random_ap_instances(config: InstanceConfig) -> list[ApInstance]:
    """A random base graph plus a clique of twins sharing a neighborhood.

    The twins form the tribe; x is a base vertex. In add mode x is taken out
    of the shared neighborhood, in remove mode it is put in.
    """

    out: list[ApInstance] = []
    for trial in range(config.trials):
        rng = random.Random(config.seed * 1_000_003 + trial)
        tribe_size = rng.randint(config.min_tribe, config.max_tribe)
        base_order = config.order - tribe_size
        if base_order < 1:
            raise ValueError(f"order {config.order} leaves no room for a tribe of {tribe_size}")
        base = nx.gnp_random_graph(base_order, config.edge_prob, seed=rng.randrange(2**31))
        x = rng.randrange(base_order)
        shared = {v for v in range(base_order) if rng.random() < config.edge_prob}
        mode = rng.choice(("add", "remove"))
        if mode == "add":
            shared.discard(x)
        else:
            shared.add(x)
        tribe = tuple(range(base_order, config.order))
        edges = set(base.edges())
        edges.update(combinations(tribe, 2))
        edges.update((v, t) for t in tribe for v in shared)
        graph = Graph(config.order, frozenset((min(u, v), max(u, v)) for u, v in edges))
        out.append(ApInstance(graph, tribe, x, mode))
    return out


def _hat_chain_order(ms: tuple[int, ...], taus: tuple[int, ...]) -> int:
    return 2 + sum(ms) + sum(taus) - len(taus)


def hat_chain_specs(max_order: int, *, min_cycle: int = 3) -> Iterator[FamilySpec]:
    """Hat-chains up to ``max_order``, one per mirror pair, smallest order first."""

    family = get_family("hatchain")
    found: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []
    r = 1
    while 2 * r + 1 <= max_order and 2 + min_cycle * r - (r + 1) <= max_order:
        budget = max_order - (2 + min_cycle * r - (r + 1))
        for extra in range(budget + 1):
            for spread in weak_compositions(extra, 2 * r + 1):
                ms = tuple(min_cycle + s for s in spread[:r])
                taus = tuple(spread[r:])
                if (ms, taus) > (ms[::-1], taus[::-1]):
                    continue
                found.append((_hat_chain_order(ms, taus), ms, taus))
        r += 1
    for _, ms, taus in sorted(found):
        yield FamilySpec(family, {"ms": ms, "taus": taus})


def kayak_specs(max_order: int) -> Iterator[FamilySpec]:
    """Kayak paddles P^k(C_g, C_h) with g <= h up to ``max_order``."""

    family = get_family("kayak")
    found = []
    for g in range(3, max_order + 1):
        for h in range(g, max_order + 1):
            for k in range(1, max_order + 1):
                order = g + h + k - 1
                if order <= max_order:
                    found.append((order, g, h, k))
    for _, g, h, k in sorted(found):
        yield FamilySpec(family, {"g": g, "h": h, "k": k})
