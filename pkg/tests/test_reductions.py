from __future__ import annotations

from itertools import product
import unittest

from csfbench.graphs import RootedGraph, clique, cycle, kpc, path_conjoin, path_graph, pineapple, spider, spider_conjoin
from csfbench.graphs import gch as gch_graph
from csfbench.graphs import kgh as kgh_graph
from csfbench.oracle import csf_oracle
from csfbench.oracle_cache import OracleCache
from csfbench.providers import (
    CliqueTails,
    CycleTails,
    OracleBridges,
    OracleTails,
    PathTails,
    bridges_for,
    node_kind,
    path_sf,
    tails_for,
)
from csfbench.reductions import (
    SpiderTails,
    clique_path_convolution,
    cpg_reduce,
    gch_sf,
    kgh_sf,
    kpc_via_kpg,
    kpg_reduce,
    pineapple_sf,
    pkpg_sf,
    spider3_reduce,
    spider3_sf,
    spider_clique_sf,
    spider_cycle_reduce,
    spider_gk_sf,
    spider_l_reduce,
    spider_tail_reduce,
)
from csfbench.symfunc import e

_cache = OracleCache()


def oracle(node):
    return csf_oracle(node, cache=_cache)


K1 = clique(1)
NODES = (
    RootedGraph(clique(1)),
    RootedGraph(clique(2)),
    RootedGraph(clique(3)),
    RootedGraph(cycle(4)),
    RootedGraph(path_graph(3), 0),
)


class ProviderTests(unittest.TestCase):
    def test_node_kinds(self) -> None:
        self.assertEqual(node_kind(RootedGraph(clique(1))), ("path", 1))
        self.assertEqual(node_kind(RootedGraph(clique(2))), ("path", 2))
        self.assertEqual(node_kind(RootedGraph(clique(3))), ("clique", 3))
        self.assertEqual(node_kind(RootedGraph(cycle(4))), ("cycle", 4))
        self.assertEqual(node_kind(RootedGraph(path_graph(3), 0)), ("path", 3))
        self.assertEqual(node_kind(RootedGraph(path_graph(3), 1)), ("other", 3))

    def test_closed_form_tails_match_oracle(self) -> None:
        for node in NODES:
            closed = tails_for(node)
            self.assertNotIsInstance(closed, OracleTails)
            slow = OracleTails(node, oracle)
            for t in range(4):
                self.assertEqual(closed(t), slow(t), (node, t))

    def test_middle_rooted_path_falls_back_to_oracle(self) -> None:
        self.assertIsInstance(tails_for(RootedGraph(path_graph(3), 1)), OracleTails)

    def test_shifted_bridges_match_oracle(self) -> None:
        left, right = RootedGraph(path_graph(2)), RootedGraph(clique(3))
        fast = bridges_for(left, right)
        slow = OracleBridges(left, right, oracle)
        for k in range(4):
            self.assertEqual(fast(k), slow(k))

    def test_simple_tails(self) -> None:
        self.assertEqual(PathTails()(0), e(1))
        self.assertEqual(CliqueTails(3)(0), 6 * e(3))
        self.assertEqual(CycleTails(3)(0), 6 * e(3))
        self.assertEqual(path_sf(0), e())
        with self.assertRaises(ValueError):
            PathTails()(-1)


class PathConjoinedTests(unittest.TestCase):
    def test_kpg(self) -> None:
        for g, k, node in product(range(1, 5), range(0, 3), NODES):
            if g + k + node.n - 1 > 9:
                continue
            expected = oracle(path_conjoin(clique(g), node, k))
            self.assertEqual(kpg_reduce(g, k, tails_for(node)), expected, (g, k, node))

    def test_cpg(self) -> None:
        for g, k, node in product(range(2, 6), range(0, 3), NODES):
            if g + k + node.n - 1 > 9:
                continue
            expected = oracle(path_conjoin(cycle(g), node, k))
            self.assertEqual(cpg_reduce(g, k, tails_for(node)), expected, (g, k, node))

    def test_kpc_via_kpg(self) -> None:
        self.assertEqual(kpc_via_kpg(4, 2, 4), oracle(kpc(4, 2, 4)))
        self.assertEqual(kpc_via_kpg(2, 0, 3), oracle(kpc(2, 0, 3)))


class SpiderTests(unittest.TestCase):
    def test_spider3_closed_form(self) -> None:
        for a, b, c in product(range(0, 4), repeat=3):
            self.assertEqual(spider3_sf(a, b, c), oracle(spider((a, b, c))), (a, b, c))

    def test_spider3_reduce(self) -> None:
        for g, h, j in product(range(0, 3), range(1, 3), range(0, 3)):
            G, H, J = NODES[2], NODES[1], NODES[3]
            if g + h + j + G.n + H.n + J.n - 2 > 9:
                continue
            expected = oracle(spider_conjoin((g, h, j), (G, H, J)))
            self.assertEqual(spider3_reduce(g, h, j, G, H, J, csf=oracle), expected, (g, h, j))

    def test_spider3_reduce_rejects_empty_middle_leg(self) -> None:
        with self.assertRaises(ValueError):
            spider3_reduce(1, 0, 1, K1, K1, K1, csf=oracle)

    def test_l_spider(self) -> None:
        cases = [
            ((1, 1, 1, 1), (NODES[0], NODES[1], NODES[0], NODES[2])),
            ((2, 1, 1, 1), (NODES[2], NODES[0], NODES[1], NODES[0])),
            ((1, 2, 0, 1), (NODES[1], NODES[0], NODES[3], NODES[0])),
            ((1, 1, 1, 1, 1), (NODES[0],) * 5),
        ]
        for tau, nodes in cases:
            expected = oracle(spider_conjoin(tau, nodes))
            self.assertEqual(spider_l_reduce(tau, nodes, csf=oracle), expected, tau)

    def test_spider_tail_modes(self) -> None:
        for g, h, j, node in product(range(0, 3), range(1, 3), range(0, 3), NODES[:4]):
            H = NODES[2]
            two = spider_tail_reduce("two-node", g, h, j, tails_for(node), tails_for(H), bridges_for(node, H))
            self.assertEqual(two, oracle(spider_conjoin((g, h, j), (node, H, K1))), (g, h, j, node))
            one = spider_tail_reduce("one-node", g, h, j, tails_for(node))
            self.assertEqual(one, oracle(spider_conjoin((g, h, j), (node, K1, K1))), (g, h, j, node))

    def test_convolution(self) -> None:
        for n in range(0, 11):
            for a in range(0, n + 1):
                clique_path_convolution(a, n)
        with self.assertRaises(ValueError):
            clique_path_convolution(3, 2)

    def test_spider_clique(self) -> None:
        for g, h, k, m in product(range(0, 2), range(1, 3), range(0, 3), range(1, 5)):
            G, H = NODES[3], NODES[1]
            if g + h + k + m + G.n + H.n - 2 > 9:
                continue
            expected = oracle(spider_conjoin((g, h, k), (G, H, clique(m))))
            got = spider_clique_sf(g, h, k, m, tails_for(G), tails_for(H), bridges_for(G, H))
            self.assertEqual(got, expected, (g, h, k, m))

    def test_spider_gk(self) -> None:
        for g, k, h, m in product(range(0, 3), range(0, 3), range(1, 3), range(1, 5)):
            G = NODES[2]
            if g + k + h + m + G.n - 1 > 9:
                continue
            expected = oracle(spider_conjoin((g, k, h), (G, clique(m), K1)))
            self.assertEqual(spider_gk_sf(g, k, h, m, tails_for(G)), expected, (g, k, h, m))

    def test_pineapple(self) -> None:
        for g, h, m in product(range(0, 4), range(1, 4), range(1, 6)):
            if g + h + m > 9:
                continue
            self.assertEqual(pineapple_sf(g, h, m), oracle(pineapple(g, h, m)), (g, h, m))

    def test_spider_cycle(self) -> None:
        for g, h, k, m in product(range(0, 2), range(0, 3), range(0, 3), range(2, 6)):
            G, H = NODES[4], NODES[1]
            if g + h + k + m + G.n + H.n - 2 > 9:
                continue
            tails = SpiderTails(g, h, tails_for(G), tails_for(H), bridges_for(G, H), G, H)
            expected = oracle(spider_conjoin((g, h, k), (G, H, cycle(m))))
            self.assertEqual(spider_cycle_reduce(g, h, k, m, tails), expected, (g, h, k, m))


class ChainConjoinedTests(unittest.TestCase):
    def test_kgh(self) -> None:
        for g, h, m in product(range(0, 3), range(0, 3), range(2, 5)):
            G, H = NODES[3], NODES[4]
            if g + h + m + G.n + H.n - 2 > 9:
                continue
            expected = oracle(kgh_graph(g, h, m, G, H))
            got = kgh_sf(g, h, m, tails_for(G), tails_for(H), bridges_for(G, H))
            self.assertEqual(got, expected, (g, h, m))

    def test_pkpg(self) -> None:
        for g, h, m, G in product(range(0, 3), range(0, 3), range(2, 5), NODES):
            if g + h + m + G.n - 1 > 9:
                continue
            expected = oracle(kgh_graph(g, h, m, G, K1))
            self.assertEqual(pkpg_sf(g, h, m, tails_for(G)), expected, (g, h, m, G))

    def test_gch(self) -> None:
        for g, h, m in product(range(0, 3), range(0, 3), range(2, 6)):
            G, H = NODES[2], NODES[1]
            if g + h + m + G.n + H.n - 2 > 9:
                continue
            expected = oracle(gch_graph(g, h, m, G, H))
            got = gch_sf(g, h, m, tails_for(G), tails_for(H), bridges_for(G, H))
            self.assertEqual(got, expected, (g, h, m))

    def test_gch_bare_cycles(self) -> None:
        k1 = NODES[0]
        self.assertEqual(gch_sf(0, 0, 3, tails_for(k1), tails_for(k1), bridges_for(k1, k1)), 6 * e(3))
        for m in range(3, 8):
            got = gch_sf(0, 0, m, tails_for(k1), tails_for(k1), bridges_for(k1, k1))
            self.assertEqual(got, oracle(cycle(m)), m)


if __name__ == "__main__":
    unittest.main()
