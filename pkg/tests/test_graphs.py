from __future__ import annotations

import unittest

import networkx as nx

from csfbench.graphs import (
    DoubleRootedGraph,
    Graph,
    GraphConstructionError,
    RootedGraph,
    chain_conjoin,
    clique,
    cycle,
    graph_from_json,
    hat,
    hat_chain,
    kayak,
    kchain,
    kkp,
    kpc,
    lollipop,
    path_conjoin,
    path_graph,
    pineapple,
    pkp,
    spider,
    spider_conjoin,
    tadpole,
    tailed,
)


def iso(a: Graph, b: nx.Graph) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b)


class BasicGraphTests(unittest.TestCase):
    def test_standard_graphs(self) -> None:
        self.assertEqual(clique(4).edge_count, 6)
        self.assertEqual(cycle(5).edge_count, 5)
        self.assertEqual(cycle(2), path_graph(2))
        self.assertEqual(path_graph(1).edge_count, 0)

    def test_rejects_loops_and_duplicates(self) -> None:
        with self.assertRaises(GraphConstructionError):
            Graph(2, frozenset({(1, 1)}))
        with self.assertRaises(GraphConstructionError):
            Graph.from_edges(3, [(0, 1), (1, 0)])
        with self.assertRaises(GraphConstructionError):
            path_graph(3).with_edges([(1, 2)])

    def test_key_is_canonical_for_labelled_graphs(self) -> None:
        a = Graph.from_edges(3, [(1, 2), (0, 1)])
        b = Graph.from_edges(3, [(1, 0), (2, 1)])
        self.assertEqual(a.key(), "3:0-1;1-2")
        self.assertEqual(a.key(), b.key())

    def test_without_vertex_shifts_labels(self) -> None:
        g = path_graph(4).without_vertex(1)
        self.assertEqual(g.n, 3)
        self.assertEqual(g.sorted_edges(), [(1, 2)])

    def test_json_round_trip_keeps_roots(self) -> None:
        node = DoubleRootedGraph(cycle(4), (0, 2))
        self.assertEqual(graph_from_json(node.to_json()), node)
        rooted = RootedGraph(clique(3), 1)
        self.assertEqual(graph_from_json(rooted.to_json()), rooted)
        self.assertEqual(graph_from_json({"n": 2, "edges": [[0, 1]]}), path_graph(2))
        with self.assertRaises(ValueError):
            graph_from_json({"edges": []})


class ConjoinTests(unittest.TestCase):
    def test_path_conjoin_orders(self) -> None:
        g = path_conjoin(clique(3), clique(3), 0)
        self.assertEqual((g.n, g.edge_count), (5, 6))
        g = path_conjoin(clique(3), clique(3), 2)
        self.assertEqual((g.n, g.edge_count), (7, 8))

    def test_tailed_is_rooted_at_the_free_end(self) -> None:
        t = tailed(clique(3), 2)
        self.assertEqual(t.graph.n, 5)
        self.assertEqual(len(t.graph.neighbors(t.root)), 1)
        t0 = tailed(clique(3), 0)
        self.assertEqual(t0.graph, clique(3))
        self.assertEqual(t0.root, 0)

    def test_lollipop_and_tadpole_match_networkx(self) -> None:
        self.assertTrue(iso(lollipop(4, 3), nx.lollipop_graph(4, 3)))
        self.assertTrue(iso(tadpole(5, 2), nx.tadpole_graph(5, 2)))

    def test_spider(self) -> None:
        s = spider((1, 2, 3))
        self.assertEqual((s.n, s.edge_count), (7, 6))
        self.assertEqual(len(s.neighbors(0)), 3)
        self.assertEqual(spider((0, 0)).n, 1)
        conj = spider_conjoin((1, 2, 3), (clique(1), clique(1), clique(1)))
        self.assertTrue(iso(conj, s.to_networkx()))

    def test_kchain(self) -> None:
        g = kchain((3, 3))
        expected = nx.Graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        self.assertTrue(iso(g, expected))
        self.assertEqual(kchain((4,)), clique(4))
        with self.assertRaises(ValueError):
            kchain((1, 3))

    def test_family_orders_and_sizes(self) -> None:
        self.assertEqual((kpc(4, 2, 4).n, kpc(4, 2, 4).edge_count), (9, 12))
        self.assertEqual((pkp(2, 1, 4).n, pkp(2, 1, 4).edge_count), (7, 9))
        self.assertEqual((kkp(1, 5, 3).n, kkp(1, 5, 3).edge_count), (9, 19))
        self.assertEqual(kkp(1, 6, 3).n, 10)
        self.assertEqual((pineapple(1, 2, 4).n, pineapple(1, 2, 4).edge_count), (7, 9))
        self.assertEqual((hat(1, 4, 1, adjacent=False).n, hat(1, 4, 1, adjacent=False).edge_count), (6, 6))
        self.assertEqual(kayak(3, 4, 2).n, 8)

    def test_nonadjacent_hat_roots(self) -> None:
        g = hat(1, 4, 1, adjacent=False)
        leaves = [v for v in range(g.n) if len(g.neighbors(v)) == 1]
        self.assertEqual(len(leaves), 2)
        anchors = [next(iter(g.neighbors(v))) for v in leaves]
        self.assertFalse(g.has_edge(*anchors))

    def test_pkp_tails_sit_on_distinct_vertices(self) -> None:
        g = pkp(1, 1, 3)
        expected = nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
        self.assertTrue(iso(g, expected))

    def test_hat_chain_shape(self) -> None:
        g = hat_chain((3, 3), (0, 0, 0))
        self.assertEqual((g.n, g.edge_count), (5, 6))
        with self.assertRaises(ValueError):
            hat_chain((3,), (1,))

    def test_chain_needs_matching_lengths(self) -> None:
        with self.assertRaises(ValueError):
            chain_conjoin((1, 1), (clique(1), clique(1)))

    def test_parameter_validation(self) -> None:
        with self.assertRaises(ValueError):
            kayak(2, 3, 1)
        with self.assertRaises(ValueError):
            kpc(0, 1, 3)
        with self.assertRaises(ValueError):
            path_conjoin(clique(2), clique(2), -1)


if __name__ == "__main__":
    unittest.main()
