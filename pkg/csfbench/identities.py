"""Structural identities of chromatic symmetric functions, checked exactly.

Graph identities (triple deletion, arithmetic progressions, the one-step
KPG and CPG recurrences) are evaluated with the oracle. The composition
identity for f_1, f_2, f_3 and the clique-path convolution are checked on
closed forms.
"""

from __future__ import annotations

from itertools import combinations
import logging
from typing import Literal, Sequence

from .compositions import compositions_of
from .expansions import f_weights
from .graphs import Graph, Node, clique, cycle, path_conjoin, tailed, underlying
from .oracle import csf_oracle
from .providers import CsfFn
from .reductions import clique_path_convolution
from .report_schema import CheckReport, residual_terms
from .symfunc import SymFuncE

logger = logging.getLogger(__name__)

ApMode = Literal["add", "remove"]


def _report(check: str, lhs: SymFuncE, rhs: SymFuncE, *, graph: Graph | None = None, **params) -> CheckReport:
    residual = residual_terms(lhs, rhs)
    if residual:
        logger.warning("%s failed for %s", check, params or (graph.key() if graph else ""))
    return CheckReport(
        check=check,
        passed=not residual,
        graph=None if graph is None else graph.to_json(),
        params=params,
        residual_terms=residual,
    )


def _is_stable(graph: Graph, vertices: Sequence[int]) -> bool:
    return all(not graph.has_edge(u, v) for u, v in combinations(vertices, 2))


def check_triple_deletion(graph: Graph, triple: Sequence[int], *, csf: CsfFn = csf_oracle) -> CheckReport:
    """Both triple-deletion equations for a stable triple t1, t2, t3.

    e1 = t1t2, e2 = t2t3, e3 = t1t3; G_S adds the edges indexed by S.
    """

    t = tuple(triple)
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"need three distinct vertices, got {triple}")
    if any(not 0 <= v < graph.n for v in t):
        raise ValueError(f"triple {t} out of range for {graph.n} vertices")
    if not _is_stable(graph, t):
        raise ValueError(f"vertices {t} are not pairwise non-adjacent")

    links = {1: (t[0], t[1]), 2: (t[1], t[2]), 3: (t[0], t[2])}

    def x(*indices: int) -> SymFuncE:
        return csf(graph.with_edges(links[i] for i in indices))

    first = residual_terms(x(1, 2), x(1) + x(2, 3) - x(3))
    second = residual_terms(x(1, 2, 3), x(1, 3) + x(2, 3) - x(3))
    passed = not first and not second
    if not passed:
        logger.warning("triple deletion failed on %s with triple %s", graph.key(), t)
    return CheckReport(
        check="triple-deletion",
        passed=passed,
        graph=graph.to_json(),
        params={"triple": list(t)},
        residual_terms=first + second,
    )


def is_tribe_vertex_pair(graph: Graph, tribe: Sequence[int], x: int) -> bool:
    """K is a clique whose members share closed neighborhoods once x is removed."""

    members = list(tribe)
    if not members or x in members or len(set(members)) != len(members):
        return False
    if any(not graph.has_edge(u, v) for u, v in combinations(members, 2)):
        return False
    adj = graph.adjacency()
    closed = [(adj[v] | {v}) - {x} for v in members]
    return all(c == closed[0] for c in closed)


def ap_sequence(graph: Graph, tribe: Sequence[int], x: int, mode: ApMode) -> list[Graph]:
    """G_0..G_|K|: G_i connects (add) or disconnects (remove) the first i tribe members and x."""

    seq = [graph]
    for v in tribe:
        prev = seq[-1]
        seq.append(prev.with_edges([(v, x)]) if mode == "add" else prev.without_edges([(v, x)]))
    return seq


def check_ap(
    graph: Graph,
    tribe: Sequence[int],
    x: int | None,
    mode: ApMode,
    *,
    csf: CsfFn = csf_oracle,
) -> CheckReport:
    """(i-j)X_{G_k} + (j-k)X_{G_i} + (k-i)X_{G_j} = 0 for all i <= j <= k <= |K|.

    ``x=None`` adds x as a new isolated vertex (add mode only).
    """

    if mode not in ("add", "remove"):
        raise ValueError(f"mode must be 'add' or 'remove', got {mode!r}")
    if x is None:
        if mode != "add":
            raise ValueError("remove mode needs x to be a vertex of the graph")
        graph, x = graph.with_isolated_vertex(), graph.n
    if not 0 <= x < graph.n:
        raise ValueError(f"vertex {x} out of range for {graph.n} vertices")
    if not is_tribe_vertex_pair(graph, tribe, x):
        raise ValueError(f"({list(tribe)}, {x}) is not a tribe-vertex pair")
    adjacent = [graph.has_edge(v, x) for v in tribe]
    if mode == "add" and any(adjacent):
        raise ValueError("add mode needs x non-adjacent to every tribe member")
    if mode == "remove" and not all(adjacent):
        raise ValueError("remove mode needs x adjacent to every tribe member")

    values = [csf(g) for g in ap_sequence(graph, tribe, x, mode)]
    residual: list[dict] = []
    m = len(values) - 1
    for i in range(m + 1):
        for j in range(i, m + 1):
            for k in range(j, m + 1):
                combo = values[k] * (i - j) + values[i] * (j - k) + values[j] * (k - i)
                if not combo.is_zero():
                    residual.append({"ijk": [i, j, k], "terms": residual_terms(combo, SymFuncE.zero())})
    if residual:
        logger.warning("AP identity failed on %s", graph.key())
    return CheckReport(
        check="ap",
        passed=not residual,
        graph=graph.to_json(),
        params={"tribe": list(tribe), "x": x, "mode": mode},
        residual_terms=residual,
    )


def check_f123(max_n: int = 12, max_a: int = 12) -> CheckReport:
    """f1 - f2 - f3 is a - 1 on single-part compositions and 0 otherwise."""

    failures = []
    for n in range(1, max_n + 1):
        for comp in compositions_of(n):
            for a in range(2, max_a + 1):
                expected = a - 1 if comp.length == 1 else 0
                got = f_weights(comp, a).balance
                if got != expected:
                    failures.append({"composition": list(comp.parts), "a": a, "got": got, "expected": expected})
    return CheckReport(
        check="f123",
        passed=not failures,
        params={"max_n": max_n, "max_a": max_a},
        residual_terms=failures,
    )


def check_convolution(max_n: int = 10) -> CheckReport:
    failures = []
    for n in range(0, max_n + 1):
        for a in range(0, n + 1):
            try:
                clique_path_convolution(a, n)
            except ArithmeticError as exc:
                failures.append({"a": a, "n": n, "error": str(exc)})
    return CheckReport(
        check="convolution",
        passed=not failures,
        params={"max_n": max_n},
        residual_terms=failures,
    )


def check_kpg_step(g: int, k: int, node: Node, *, csf: CsfFn = csf_oracle) -> CheckReport:
    """X_{P^k(K_g,H)} = (g-1) X_{P^{k+1}(K_{g-1},H)} - (g-2) X_{K_{g-1}} X_{H^k}."""

    if g < 2 or k < 0:
        raise ValueError(f"the KPG step needs g >= 2 and k >= 0, got g={g}, k={k}")
    lhs = csf(path_conjoin(clique(g), node, k))
    rhs = csf(path_conjoin(clique(g - 1), node, k + 1)) * (g - 1) - csf(clique(g - 1)) * csf(tailed(node, k)) * (g - 2)
    return _report("kpg-step", lhs, rhs, g=g, k=k, node=underlying(node).key())


def check_cpg_step(g: int, k: int, node: Node, *, csf: CsfFn = csf_oracle) -> CheckReport:
    """X_{P^k(C_g,H)} = X_{P^{k+1}(C_{g-1},H)} + X_{H^{k+g-1}} - X_{C_{g-1}} X_{H^k}."""

    if g < 3 or k < 0:
        raise ValueError(f"the CPG step needs g >= 3 and k >= 0, got g={g}, k={k}")
    lhs = csf(path_conjoin(cycle(g), node, k))
    rhs = (
        csf(path_conjoin(cycle(g - 1), node, k + 1))
        + csf(tailed(node, k + g - 1))
        - csf(cycle(g - 1)) * csf(tailed(node, k))
    )
    return _report("cpg-step", lhs, rhs, g=g, k=k, node=underlying(node).key())
