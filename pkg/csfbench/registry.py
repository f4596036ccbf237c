"""Named graph families addressable by spec strings.

A spec is ``name:key=value,key=value``; list values are comma separated
and then parameters are separated by ``;`` (``hatchain:ms=4,4;taus=0,1,0``).
A grid uses the same layout with ``key=a..b`` inclusive ranges and
``key=x|y|z`` alternatives. Node parameters take ``K<n>``, ``C<n>`` or
``P<n>``; a path node is rooted at an end.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
import logging
import re
from typing import Any, Callable, Iterator

from . import graphs as gk
from . import reductions as rd
from .expansions import kchain_eI, kkp_eI, kpc_eI, lollipop_eI, path_eI, pkp_eI, tadpole_eI
from .graphs import Graph, RootedGraph
from .providers import bridges_for, path_sf, tails_for
from .symfunc import EIExpansion, SymFuncE

logger = logging.getLogger(__name__)

Params = dict[str, Any]

_SPLIT = re.compile(r"[,;](?=\s*[A-Za-z_]\w*\s*=)")
_NODE = re.compile(r"^([KCP])(\d+)$")

NODE_PARAMS = frozenset({"G", "H", "J"})
INT_LIST_PARAMS = frozenset({"gamma", "tau", "ms", "taus"})
NODE_LIST_PARAMS = frozenset({"nodes"})


class FamilySpecError(ValueError):
    """Malformed family spec, grid or node token."""


@dataclass(frozen=True)
class NodeToken:
    """A parsed node token; keeps its text for rendering."""

    text: str
    node: RootedGraph

    def __str__(self) -> str:
        return self.text


def parse_node(token: str) -> NodeToken:
    text = token.strip()
    match = _NODE.match(text)
    if not match:
        raise FamilySpecError(f"bad node token {token!r}; expected K<n>, C<n> or P<n>")
    kind, size = match.group(1), int(match.group(2))
    try:
        if kind == "K":
            graph = gk.clique(size)
        elif kind == "C":
            graph = gk.cycle(size)
        else:
            graph = gk.path_graph(size)
    except ValueError as exc:
        raise FamilySpecError(f"bad node token {token!r}: {exc}") from exc
    return NodeToken(text, RootedGraph(graph, 0))


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError as exc:
        raise FamilySpecError(f"parameter {key} expects an integer, got {raw!r}") from exc


def parse_value(key: str, raw: str) -> Any:
    if key in NODE_PARAMS:
        return parse_node(raw)
    if key in INT_LIST_PARAMS:
        return tuple(_parse_int(key, part) for part in raw.split(",") if part.strip())
    if key in NODE_LIST_PARAMS:
        return tuple(parse_node(part) for part in raw.split(",") if part.strip())
    return _parse_int(key, raw)


def render_value(value: Any) -> str:
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    return str(value)


def _split_pairs(body: str) -> list[tuple[str, str]]:
    pairs = []
    for chunk in _SPLIT.split(body):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise FamilySpecError(f"expected key=value, got {chunk!r}")
        key, raw = chunk.split("=", 1)
        pairs.append((key.strip(), raw.strip()))
    return pairs


@dataclass(frozen=True)
class Family:
    name: str
    params: tuple[str, ...]
    build: Callable[..., Graph]
    formula: Callable[..., SymFuncE] | None = None
    expansion: Callable[..., EIExpansion] | None = None
    default_grid: str = ""
    description: str = ""

    def render(self, params: Params) -> str:
        sep = ";" if any(isinstance(params[k], tuple) for k in self.params) else ","
        return f"{self.name}:" + sep.join(f"{k}={render_value(params[k])}" for k in self.params)

    def graph(self, params: Params) -> Graph:
        return self.build(**self._resolved(params))

    def evaluate(self, params: Params) -> SymFuncE:
        if self.formula is None:
            raise FamilySpecError(f"family {self.name} has no formula; use the oracle engine")
        return self.formula(**self._resolved(params))

    def composition_terms(self, params: Params) -> EIExpansion | None:
        if self.expansion is None:
            return None
        return self.expansion(**self._resolved(params))

    def _resolved(self, params: Params) -> Params:
        out = {}
        for key in self.params:
            value = params[key]
            if isinstance(value, NodeToken):
                value = value.node
            elif isinstance(value, tuple) and value and isinstance(value[0], NodeToken):
                value = tuple(v.node for v in value)
            out[key] = value
        return out


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: Params

    def __str__(self) -> str:
        return self.family.render(self.params)

    def graph(self) -> Graph:
        return self.family.graph(self.params)

    def evaluate(self) -> SymFuncE:
        return self.family.evaluate(self.params)

    def composition_terms(self) -> EIExpansion | None:
        return self.family.composition_terms(self.params)


# --- family formulas on closed-form providers ---


def _kpg(g: int, k: int, H: RootedGraph) -> SymFuncE:
    return rd.kpg_reduce(g, k, tails_for(H))


def _cpg(g: int, k: int, H: RootedGraph) -> SymFuncE:
    return rd.cpg_reduce(g, k, tails_for(H))


def _legs(tau: tuple[int, ...], nodes: tuple[RootedGraph, ...]) -> tuple[RootedGraph, ...]:
    """A single node is repeated on every leg; shorter lists are padded with K_1."""

    if len(nodes) == 1:
        return nodes * len(tau)
    if len(nodes) > len(tau):
        raise FamilySpecError(f"{len(nodes)} nodes given for {len(tau)} legs")
    return nodes + (RootedGraph(gk.clique(1)),) * (len(tau) - len(nodes))


def _spiderl(tau: tuple[int, ...], nodes: tuple[RootedGraph, ...]) -> SymFuncE:
    return rd.spider_l_reduce(tau, _legs(tau, nodes))


def _spider3r(g: int, h: int, j: int, G: RootedGraph, H: RootedGraph, J: RootedGraph) -> SymFuncE:
    return rd.spider3_reduce(g, h, j, G, H, J)


def _spidertail(g: int, h: int, j: int, G: RootedGraph, H: RootedGraph) -> SymFuncE:
    return rd.spider_tail_reduce("two-node", g, h, j, tails_for(G), tails_for(H), bridges_for(G, H))


def _spidertail1(g: int, h: int, j: int, G: RootedGraph) -> SymFuncE:
    return rd.spider_tail_reduce("one-node", g, h, j, tails_for(G))


def _spiderclique(g: int, h: int, k: int, m: int, G: RootedGraph, H: RootedGraph) -> SymFuncE:
    return rd.spider_clique_sf(g, h, k, m, tails_for(G), tails_for(H), bridges_for(G, H))


def _spidergk(g: int, k: int, h: int, m: int, G: RootedGraph) -> SymFuncE:
    return rd.spider_gk_sf(g, k, h, m, tails_for(G))


def _spidercycle(g: int, h: int, k: int, m: int, G: RootedGraph, H: RootedGraph) -> SymFuncE:
    spider_tails = rd.SpiderTails(g, h, tails_for(G), tails_for(H), bridges_for(G, H), G, H)
    return rd.spider_cycle_reduce(g, h, k, m, spider_tails)


def _kgh(g: int, h: int, m: int, G: RootedGraph, H: RootedGraph) -> SymFuncE:
    return rd.kgh_sf(g, h, m, tails_for(G), tails_for(H), bridges_for(G, H))


def _pkpg(g: int, h: int, m: int, G: RootedGraph) -> SymFuncE:
    return rd.pkpg_sf(g, h, m, tails_for(G))


def _gch(g: int, h: int, m: int, G: RootedGraph, H: RootedGraph) -> SymFuncE:
    return rd.gch_sf(g, h, m, tails_for(G), tails_for(H), bridges_for(G, H))


def _hat(g: int, m: int, h: int) -> SymFuncE:
    k1 = RootedGraph(gk.clique(1))
    return _gch(g, h, m, k1, k1)


def _flat(expansion: Callable[..., EIExpansion]) -> Callable[..., SymFuncE]:
    def formula(**params: Any) -> SymFuncE:
        return expansion(**params).flatten()

    return formula


_NODES = "K1|K2|K3|C4|P3"

FAMILIES: dict[str, Family] = {}


def register(family: Family) -> Family:
    if family.name in FAMILIES:
        raise ValueError(f"family {family.name} registered twice")
    FAMILIES[family.name] = family
    return family


register(Family(
    "path", ("n",), build=gk.path_graph,
    formula=path_sf, expansion=path_eI,
    default_grid="n=1..10", description="P_n",
))
register(Family(
    "lollipop", ("a", "n"), build=lambda a, n: gk.lollipop(a, n - a),
    formula=_flat(lollipop_eI), expansion=lollipop_eI,
    default_grid="n=1..9,a=1..7", description="K_a with a tail, order n",
))
register(Family(
    "tadpole", ("n", "l"), build=lambda n, l: gk.tadpole(n - l, l),
    formula=_flat(tadpole_eI), expansion=tadpole_eI,
    default_grid="n=2..9,l=0..7", description="C_{n-l} with a tail of length l",
))
register(Family(
    "kchain", ("gamma",), build=gk.kchain,
    formula=_flat(kchain_eI), expansion=kchain_eI,
    default_grid="gamma=2|3|4|5|2,2|2,3|3,2|3,3|2,4|4,2|3,4|4,3|2,2,2|2,3,2|3,2,3|2,2,2,2|3,3,3",
    description="cliques glued at single vertices",
))
register(Family(
    "kpc", ("a", "b", "c"), build=gk.kpc,
    formula=_flat(kpc_eI), expansion=kpc_eI,
    default_grid="a=1..4,b=0..3,c=2..5", description="P^b(K_a, C_c)",
))
register(Family(
    "pkp", ("g", "h", "m"), build=gk.pkp,
    formula=_flat(pkp_eI), expansion=pkp_eI,
    default_grid="m=2..5,g=0..3,h=0..3", description="K_m with tails g and h",
))
register(Family(
    "kkp", ("a", "b", "c"), build=gk.kkp,
    formula=_flat(kkp_eI), expansion=kkp_eI,
    default_grid="a=0..2,b=1..4,c=1..4", description="K_{b+1}^(0a)(K_c, K_1)",
))
register(Family(
    "spider3", ("a", "b", "c"), build=lambda a, b, c: gk.spider((a, b, c)),
    formula=rd.spider3_sf,
    default_grid="a=0..4,b=0..4,c=0..4", description="3-spider S(abc)",
))
register(Family(
    "kpg", ("g", "k", "H"), build=lambda g, k, H: gk.path_conjoin(gk.clique(g), H, k),
    formula=_kpg, default_grid=f"g=1..4,k=0..2,H={_NODES}", description="P^k(K_g, H)",
))
register(Family(
    "cpg", ("g", "k", "H"), build=lambda g, k, H: gk.path_conjoin(gk.cycle(g), H, k),
    formula=_cpg, default_grid=f"g=2..5,k=0..2,H={_NODES}", description="P^k(C_g, H)",
))
register(Family(
    "spiderl", ("tau", "nodes"), build=lambda tau, nodes: gk.spider_conjoin(tau, _legs(tau, nodes)),
    formula=_spiderl,
    default_grid="tau=1,1,1|1,1,1,1|1,1,2,1|2,1,1,1|1,1,1,1,1|1,2,1,2;nodes=K1|K3,K1,K2|K2,K1,K1,C4",
    description="l-spider-conjoined graph",
))
register(Family(
    "spider3r", ("g", "h", "j", "G", "H", "J"),
    build=lambda g, h, j, G, H, J: gk.spider_conjoin((g, h, j), (G, H, J)),
    formula=_spider3r, default_grid="g=0..2,h=1..2,j=0..2,G=K1|K3,H=K1|K2,J=K1|C4",
    description="S^{ghj}(G, H, J)",
))
register(Family(
    "spidertail", ("g", "h", "j", "G", "H"),
    build=lambda g, h, j, G, H: gk.spider_conjoin((g, h, j), (G, H, gk.clique(1))),
    formula=_spidertail, default_grid=f"g=0..2,h=1..2,j=0..2,G={_NODES},H=K1|K3",
    description="S_j^{gh}(G, H)",
))
register(Family(
    "spidertail1", ("g", "h", "j", "G"),
    build=lambda g, h, j, G: gk.spider_conjoin((g, h, j), (G, gk.clique(1), gk.clique(1))),
    formula=_spidertail1, default_grid=f"g=0..2,h=1..3,j=0..3,G={_NODES}",
    description="S_{hj}^g(G)",
))
register(Family(
    "spiderclique", ("g", "h", "k", "m", "G", "H"),
    build=lambda g, h, k, m, G, H: gk.spider_conjoin((g, h, k), (G, H, gk.clique(m))),
    formula=_spiderclique, default_grid="g=0..1,h=1..2,k=0..2,m=1..4,G=K1|K3|C4,H=K1|K2",
    description="S^{ghk}(G, H, K_m)",
))
register(Family(
    "spidergk", ("g", "k", "h", "m", "G"),
    build=lambda g, k, h, m, G: gk.spider_conjoin((g, k, h), (G, gk.clique(m), gk.clique(1))),
    formula=_spidergk, default_grid=f"g=0..2,k=0..2,h=1..2,m=1..4,G={_NODES}",
    description="S_h^{gk}(G, K_m)",
))
register(Family(
    "pineapple", ("g", "h", "m"), build=gk.pineapple,
    formula=rd.pineapple_sf, default_grid="g=0..3,h=1..3,m=1..5",
    description="K_m with two pendant paths at one vertex",
))
register(Family(
    "spidercycle", ("g", "h", "k", "m", "G", "H"),
    build=lambda g, h, k, m, G, H: gk.spider_conjoin((g, h, k), (G, H, gk.cycle(m))),
    formula=_spidercycle, default_grid="g=0..1,h=0..2,k=0..2,m=2..5,G=K1|K3|P3,H=K1|K2",
    description="S^{ghk}(G, H, C_m)",
))
register(Family(
    "kgh", ("g", "h", "m", "G", "H"), build=lambda g, h, m, G, H: gk.kgh(g, h, m, G, H),
    formula=_kgh, default_grid="g=0..2,h=0..2,m=2..4,G=K1|K3|C4,H=K1|K2|P3",
    description="K_m^{gh}(G, H)",
))
register(Family(
    "pkpg", ("g", "h", "m", "G"), build=lambda g, h, m, G: gk.kgh(g, h, m, G, gk.clique(1)),
    formula=_pkpg, default_grid=f"g=0..2,h=0..2,m=2..4,G={_NODES}",
    description="K_m^{gh}(G, K_1)",
))
register(Family(
    "gch", ("g", "h", "m", "G", "H"), build=lambda g, h, m, G, H: gk.gch(g, h, m, G, H),
    formula=_gch, default_grid="g=0..2,h=0..2,m=2..5,G=K1|K3|C4,H=K1|K2|P3",
    description="C_m^{gh}(G, H) with adjacent roots",
))
register(Family(
    "hat", ("g", "m", "h"), build=gk.hat,
    formula=_hat, default_grid="g=0..3,m=2..6,h=0..3", description="hat graph C^{gh}(K_1, C_m, K_1)",
))
register(Family(
    "kayak", ("g", "h", "k"), build=gk.kayak,
    default_grid="g=3..6,h=3..6,k=1..4", description="kayak paddle P^k(C_g, C_h)",
))
register(Family(
    "hatchain", ("ms", "taus"), build=gk.hat_chain,
    default_grid="ms=3|4|3,3;taus=0,1|1,1|0,1,0", description="hat-chain",
))


def get_family(name: str) -> Family:
    family = FAMILIES.get(name.strip())
    if family is None:
        raise FamilySpecError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    return family


def _check_keys(family: Family, keys: list[str]) -> None:
    unknown = [k for k in keys if k not in family.params]
    if unknown:
        raise FamilySpecError(f"family {family.name} has no parameter(s) {unknown}; expected {list(family.params)}")
    if len(set(keys)) != len(keys):
        raise FamilySpecError(f"duplicate parameter in {keys}")


def parse_spec(text: str) -> FamilySpec:
    name, _, body = text.partition(":")
    family = get_family(name)
    pairs = _split_pairs(body)
    _check_keys(family, [k for k, _ in pairs])
    raw = dict(pairs)
    missing = [k for k in family.params if k not in raw]
    if missing:
        raise FamilySpecError(f"spec {text!r} is missing parameter(s) {missing}")
    return FamilySpec(family, {k: parse_value(k, raw[k]) for k in family.params})


def _expand_values(key: str, raw: str) -> list[Any]:
    if ".." in raw and key not in INT_LIST_PARAMS and key not in NODE_LIST_PARAMS:
        lo, _, hi = raw.partition("..")
        start, stop = _parse_int(key, lo), _parse_int(key, hi)
        if stop < start:
            raise FamilySpecError(f"empty range {raw!r} for {key}")
        return list(range(start, stop + 1))
    return [parse_value(key, alt) for alt in raw.split("|")]


def _sort_key(value: Any) -> Any:
    if isinstance(value, tuple):
        return (len(value), tuple(_sort_key(v) for v in value))
    if isinstance(value, NodeToken):
        return (value.node.n, value.text)
    return value


def expand_grid(family: Family, grid: str | None = None) -> Iterator[FamilySpec]:
    """All parameter tuples of a grid in canonical order; missing keys use the default grid."""

    defaults = dict(_split_pairs(family.default_grid))
    given = _split_pairs(grid) if grid else []
    _check_keys(family, [k for k, _ in given])
    merged = {**defaults, **dict(given)}
    missing = [k for k in family.params if k not in merged]
    if missing:
        raise FamilySpecError(f"grid for {family.name} is missing parameter(s) {missing}")
    axes = [_expand_values(k, merged[k]) for k in family.params]
    combos = sorted(product(*axes), key=lambda combo: tuple(_sort_key(v) for v in combo))
    for combo in combos:
        yield FamilySpec(family, dict(zip(family.params, combo)))
