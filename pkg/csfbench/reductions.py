"""Reduction formulas for path-, spider- and chain-conjoined graphs.

Each reduction expresses X of a conjoined graph through chromatic
symmetric functions of smaller graphs. Those come from providers (see
``providers``), so a reduction can run entirely on closed forms or on the
oracle. Path factors use X_{P_0} = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial
import operator
from typing import Iterable, Literal, Sequence

from .graphs import Node, centered_spider_conjoin, clique, path_conjoin, spider_conjoin, tailed
from .oracle import csf_oracle
from .providers import BridgeProvider, CsfFn, CycleTails, TailProvider, cycle_sf, lollipop_sf, path_sf
from .symfunc import SymFuncE, e


def _total(terms: Iterable[SymFuncE]) -> SymFuncE:
    return reduce(operator.add, terms, SymFuncE.zero())


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


# --- path-conjoined ---


def kpg_reduce(g: int, k: int, tails: TailProvider) -> SymFuncE:
    """X_{P^k(K_g, H)} from the tails of H."""

    _require(g >= 1 and k >= 0, f"KPG needs g >= 1 and k >= 0, got g={g}, k={k}")
    inner = _total((1 - l) * e(l) * tails(k + g - 1 - l) for l in range(g))
    return inner * factorial(g - 1)


def cpg_reduce(g: int, k: int, tails: TailProvider) -> SymFuncE:
    """X_{P^k(C_g, H)} from the tails of H."""

    _require(g >= 2 and k >= 0, f"CPG needs g >= 2 and k >= 0, got g={g}, k={k}")
    head = tails(k + g - 1) * (g - 1)
    return head - _total(cycle_sf(g - l) * tails(k + l - 1) for l in range(1, g - 1))


def kpc_via_kpg(a: int, b: int, c: int) -> SymFuncE:
    """X_{P^b(K_a, C_c)} as a KPG with tadpole tails."""

    return kpg_reduce(a, b, CycleTails(c))


# --- spider-conjoined ---


def spider3_sf(a: int, b: int, c: int) -> SymFuncE:
    """X_{S(abc)} from path products."""

    _require(min(a, b, c) >= 0, f"spider legs must be >= 0, got {(a, b, c)}")
    n = a + b + c + 1
    plus = _total(path_sf(i) * path_sf(n - i) for i in range(c + 1))
    minus = _total(path_sf(i) * path_sf(n - i) for i in range(b + 1, b + c + 1))
    return plus - minus


def spider3_reduce(g: int, h: int, j: int, G: Node, H: Node, J: Node, *, csf: CsfFn = csf_oracle) -> SymFuncE:
    """X_{S^{ghj}(G,H,J)} moved onto S^{(g+j)h0}(G,H,J) and two-node terms."""

    _require(g >= 0 and j >= 0, f"3-spider needs g, j >= 0, got g={g}, j={j}")
    _require(h >= 1, f"3-spider reduction needs h >= 1, got h={h}")
    base = csf(spider_conjoin((g + j, h, 0), (G, H, J)))
    corrections = _total(
        csf(path_conjoin(G, H, g + h + i - 1)) * csf(tailed(J, j - i))
        - csf(tailed(G, g + i - 1)) * csf(path_conjoin(H, J, h + j - i))
        for i in range(1, j + 1)
    )
    return base + corrections


def spider_l_reduce(tau: Sequence[int], nodes: Sequence[Node], *, csf: CsfFn = csf_oracle) -> SymFuncE:
    """Peel the first two legs off an l-spider until three legs remain."""

    tau = tuple(tau)
    _require(len(tau) == len(nodes), f"tau has {len(tau)} legs but {len(nodes)} nodes were given")
    _require(len(tau) >= 3, f"l-spider reduction needs at least 3 legs, got {len(tau)}")
    _require(min(tau) >= 0, f"leg lengths must be >= 0, got {tau}")
    _require(tau[0] >= 1 and tau[1] >= 1, f"the first two legs must be positive, got {tau}")
    if len(tau) == 3:
        return csf(spider_conjoin(tau, nodes))

    g1, g2 = nodes[0], nodes[1]
    rest = centered_spider_conjoin(tau[2:], nodes[2:])
    first = csf(spider_conjoin((tau[0] - 1, tau[1], 1), (g1, g2, rest)))
    if len(tau) >= 4 and tau[2] >= 1:
        shorter = spider_l_reduce(tau[1:], nodes[1:], csf=csf)
    else:
        shorter = csf(spider_conjoin(tau[1:], nodes[1:]))
    second = csf(tailed(g1, tau[0] - 1)) * shorter
    third = csf(path_conjoin(g1, g2, tau[0] + tau[1] - 1)) * csf(rest)
    return first + second - third


SpiderTailMode = Literal["two-node", "one-node"]


def spider_tail_reduce(
    mode: SpiderTailMode,
    g: int,
    h: int,
    j: int,
    tails_g: TailProvider,
    tails_h: TailProvider | None = None,
    bridges: BridgeProvider | None = None,
) -> SymFuncE:
    """Two-node: X_{S^{ghj}(G,H,K_1)}. One-node: X_{S^{ghj}(G,K_1,K_1)}."""

    _require(g >= 0 and j >= 0, f"spider tail needs g, j >= 0, got g={g}, j={j}")
    _require(h >= 1, f"spider tail needs h >= 1, got h={h}")
    if mode == "two-node":
        if tails_h is None or bridges is None:
            raise ValueError("two-node mode needs tails of H and bridges P^k(G,H)")
        plus = _total(path_sf(i) * bridges(g + h + j - i) for i in range(j + 1))
        minus = _total(tails_g(g + i - 1) * tails_h(h + j - i) for i in range(1, j + 1))
        return plus - minus
    if mode == "one-node":
        plus = _total(path_sf(i) * tails_g(g + j - i + h) for i in range(j + 1))
        minus = _total(path_sf(i + h) * tails_g(g + j - i) for i in range(1, j + 1))
        return plus - minus
    raise ValueError(f"unknown spider tail mode {mode!r}")


def convolution_lhs(a: int, n: int) -> SymFuncE:
    return _total((1 - l) * e(l) * path_sf(n - l) for l in range(a + 1))


def convolution_rhs(a: int, n: int) -> SymFuncE:
    if a == n:
        return e(n)
    return lollipop_sf(a + 1, n - 1 - a) / factorial(a)


def clique_path_convolution(a: int, n: int) -> SymFuncE:
    """Sum of (1-l) e_l X_{P_{n-l}} for l <= a, checked against its closed form."""

    _require(0 <= a <= n, f"convolution needs 0 <= a <= n, got a={a}, n={n}")
    lhs = convolution_lhs(a, n)
    rhs = convolution_rhs(a, n)
    if lhs != rhs:
        raise ArithmeticError(f"convolution identity fails at a={a}, n={n}: {lhs!r} != {rhs!r}")
    return lhs


def spider_clique_sf(
    g: int,
    h: int,
    k: int,
    m: int,
    tails_g: TailProvider,
    tails_h: TailProvider,
    bridges: BridgeProvider,
) -> SymFuncE:
    """X_{S^{ghk}(G, H, K_m)}."""

    _require(m >= 1 and h >= 1, f"clique spider needs m, h >= 1, got m={m}, h={h}")
    _require(g >= 0 and k >= 0, f"clique spider needs g, k >= 0, got g={g}, k={k}")
    first = _total(e(m - 1 - z) * bridges(g + h + k + z) for z in range(m))
    top = k + m - 2
    second = _total(
        (1 - a) * e(a) * tails_g(b + g) * tails_h(top - a - b + h)
        for a in range(min(m - 1, top) + 1)
        for b in range(top - a + 1)
    )
    third = _total(lollipop_sf(m, z) * bridges(g + h + k - z - 1) for z in range(k))
    return (first - second) * factorial(m - 1) + third


def spider_gk_sf(g: int, k: int, h: int, m: int, tails_g: TailProvider) -> SymFuncE:
    """X_{S^{gkh}(G, K_m, K_1)}: a clique leg and a bare leg of length h."""

    _require(g >= 0 and k >= 0, f"needs g, k >= 0, got g={g}, k={k}")
    _require(m >= 1 and h >= 1, f"needs m, h >= 1, got m={m}, h={h}")
    head = _total(e(z) * tails_g(g + h + k + m - z - 1) for z in range(m))
    head -= _total(
        lollipop_sf(z, h) * tails_g(g + k + m - z - 1) * Fraction(1, factorial(z - 1)) for z in range(1, m)
    )
    tail = _total(
        lollipop_sf(m, z) * tails_g(g + h + k - z - 1) - lollipop_sf(m, h + z) * tails_g(g + k - z - 1)
        for z in range(k)
    )
    return head * factorial(m - 1) + tail


def pineapple_sf(g: int, h: int, m: int) -> SymFuncE:
    """K_m with pendant paths g and h at one vertex."""

    _require(g >= 0 and h >= 1 and m >= 1, f"pineapple needs g >= 0 and h, m >= 1, got g={g}, h={h}, m={m}")
    head = _total(e(z) * path_sf(g + h + m - z) for z in range(m))
    head -= _total(lollipop_sf(z, h) * path_sf(g + m - z) * Fraction(1, factorial(z - 1)) for z in range(1, m))
    return head * factorial(m - 1)


@dataclass(frozen=True)
class SpiderTails:
    """j -> X_{S^{ghj}(G, H, K_1)} through the two-node spider-tail formula.

    The formula needs a positive leg, so (g, h) is swapped when h = 0. With
    g = h = 0 the value comes from the oracle, which needs ``left``/``right``.
    """

    g: int
    h: int
    tails_g: TailProvider
    tails_h: TailProvider
    bridges: BridgeProvider
    left: Node | None = None
    right: Node | None = None

    def __call__(self, j: int) -> SymFuncE:
        if self.h >= 1:
            return spider_tail_reduce("two-node", self.g, self.h, j, self.tails_g, self.tails_h, self.bridges)
        if self.g >= 1:
            return spider_tail_reduce("two-node", self.h, self.g, j, self.tails_h, self.tails_g, self.bridges)
        if self.left is None or self.right is None:
            raise ValueError("g = h = 0 needs the node graphs for an oracle evaluation")
        return csf_oracle(spider_conjoin((0, 0, j), (self.left, self.right, clique(1))))


def spider_cycle_reduce(g: int, h: int, k: int, m: int, spider_tails: TailProvider) -> SymFuncE:
    """X_{S^{ghk}(G, H, C_m)} from spider tails S^{gh}_j(G,H)."""

    _require(m >= 2, f"cycle spider needs m >= 2, got m={m}")
    _require(min(g, h, k) >= 0, f"leg lengths must be >= 0, got {(g, h, k)}")
    head = spider_tails(k + m - 1) * (m - 1)
    return head - _total(spider_tails(k + l - 1) * cycle_sf(m - l) for l in range(1, m - 1))


# --- chain-conjoined ---


def kgh_sf(
    g: int,
    h: int,
    m: int,
    tails_g: TailProvider,
    tails_h: TailProvider,
    bridges: BridgeProvider,
) -> SymFuncE:
    """X_{K_m^{gh}(G,H)}."""

    _require(m >= 2 and g >= 0 and h >= 0, f"K_m^(gh) needs m >= 2 and g, h >= 0, got g={g}, h={h}, m={m}")
    first = _total(z * e(m - 1 - z) * bridges(g + h + z) for z in range(1, m))
    second = _total(
        (a - 1) * e(a) * tails_g(b + g) * tails_h(m - 2 - a - b + h)
        for a in range(m - 1)
        for b in range(m - 1 - a)
    )
    return (first + second * (m - 2)) * factorial(m - 2)


def pkpg_sf(g: int, h: int, m: int, tails_g: TailProvider) -> SymFuncE:
    """X_{K_m^{gh}(G,K_1)}."""

    _require(m >= 2 and g >= 0 and h >= 0, f"PKPG needs m >= 2 and g, h >= 0, got g={g}, h={h}, m={m}")
    first = _total(z * e(m - 1 - z) * tails_g(g + h + z) for z in range(1, m))
    second = _total(
        lollipop_sf(z, h) * tails_g(m - 1 - z + g) * Fraction(1, factorial(z - 1)) for z in range(1, m)
    )
    return (first - second * (m - 2)) * factorial(m - 2)


def gch_sf(
    g: int,
    h: int,
    m: int,
    tails_g: TailProvider,
    tails_h: TailProvider,
    bridges: BridgeProvider,
) -> SymFuncE:
    """X_{C_m^{gh}(G,H)} with adjacent cycle roots."""

    _require(m >= 2 and g >= 0 and h >= 0, f"C_m^(gh) needs m >= 2 and g, h >= 0, got g={g}, h={h}, m={m}")
    total = g + h + m - 1
    first = _total((m - 1 - a) * path_sf(a) * bridges(total - a) for a in range(0, m - 1))
    cyc = total - 1
    second = _total(
        tails_g(a) * tails_h(b) * cycle_sf(cyc - a - b)
        for a in range(g, cyc - h - 2 + 1)
        for b in range(h, cyc - a - 2 + 1)
    )
    third = _total(tails_g(a) * tails_h(cyc - a) for a in range(g, cyc - h + 1))
    return first + second - third * (m - 2)
