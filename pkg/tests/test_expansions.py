from __future__ import annotations

import unittest

from csfbench.compositions import Composition, compositions_of
from csfbench.expansions import (
    f_weights,
    kchain_eI,
    kkp_eI,
    kpc_coefficient,
    kpc_eI,
    lollipop_eI,
    path_eI,
    pkp_eI,
    tadpole_eI,
)
from csfbench.graphs import kchain, kkp, kpc, lollipop, path_graph, pkp, tadpole
from csfbench.oracle import csf_oracle
from csfbench.oracle_cache import OracleCache
from csfbench.symfunc import e

_cache = OracleCache()


def oracle(graph):
    return csf_oracle(graph, cache=_cache)


class PathFamilyTests(unittest.TestCase):
    def test_path_p3(self) -> None:
        self.assertEqual(path_eI(3).flatten(), 3 * e(3) + e(2, 1))

    def test_paths_match_oracle(self) -> None:
        for n in range(1, 11):
            self.assertEqual(path_eI(n).flatten(), oracle(path_graph(n)), n)

    def test_lollipops_match_oracle(self) -> None:
        for n in range(1, 10):
            for a in range(1, min(n, 6) + 1):
                self.assertEqual(lollipop_eI(a, n).flatten(), oracle(lollipop(a, n - a)), (a, n))

    def test_tadpoles_match_oracle(self) -> None:
        for n in range(2, 10):
            for l in range(0, n - 1):
                self.assertEqual(tadpole_eI(n, l).flatten(), oracle(tadpole(n - l, l)), (n, l))

    def test_triangle_lollipop_is_triangle_tadpole(self) -> None:
        for n in range(3, 10):
            self.assertEqual(lollipop_eI(3, n).flatten(), tadpole_eI(n, n - 3).flatten())

    def test_parameter_checks(self) -> None:
        with self.assertRaises(ValueError):
            path_eI(0)
        with self.assertRaises(ValueError):
            lollipop_eI(5, 4)
        with self.assertRaises(ValueError):
            tadpole_eI(4, 3)


class KChainTests(unittest.TestCase):
    def test_match_oracle(self) -> None:
        for gamma in [(2,), (4,), (2, 2), (3, 2), (2, 3), (3, 3), (2, 4), (4, 3), (2, 2, 2), (3, 2, 3), (2, 3, 2, 2)]:
            self.assertEqual(kchain_eI(gamma).flatten(), oracle(kchain(gamma)), gamma)

    def test_positive(self) -> None:
        for gamma in [(2, 5), (5, 2), (3, 3, 3), (4, 2, 2)]:
            self.assertTrue(kchain_eI(gamma).is_positive(), gamma)


class KpcTests(unittest.TestCase):
    def test_golden_values(self) -> None:
        flat = kpc_eI(4, 2, 4).flatten()
        self.assertEqual(flat.coefficient((9,)), 162)
        self.assertEqual(flat.coefficient((5, 4)), 558)
        self.assertEqual(flat.coefficient((4, 2, 2, 1)), 18)
        self.assertEqual(flat.coefficient((7, 2)), 132)

    def test_coefficient_case_split(self) -> None:
        # k1 <= a-1 and k2 >= a+b takes the fractional branch
        self.assertEqual(kpc_coefficient(Composition.of(1, 6, 2), 4, 2), 0 + 1)
        self.assertEqual(kpc_coefficient(Composition.of(2, 3), 4, 2), 0)
        self.assertEqual(kpc_coefficient(Composition.of(9), 4, 2), 3)

    def test_match_oracle_and_positive(self) -> None:
        for a in range(1, 5):
            for b in range(0, 4):
                for c in range(2, 6):
                    if a + b + c - 1 > 9:
                        continue
                    exp = kpc_eI(a, b, c)
                    self.assertTrue(exp.is_positive(), (a, b, c))
                    self.assertEqual(exp.flatten(), oracle(kpc(a, b, c)), (a, b, c))


class FWeightTests(unittest.TestCase):
    def test_balance(self) -> None:
        for n in range(1, 9):
            for comp in compositions_of(n):
                for a in range(2, 9):
                    expected = a - 1 if comp.length == 1 else 0
                    self.assertEqual(f_weights(comp, a).balance, expected)


class PkpKkpTests(unittest.TestCase):
    def test_pkp_golden(self) -> None:
        flat = pkp_eI(2, 1, 4).flatten()
        self.assertEqual(flat.coefficient((4, 2, 1)), 26)
        self.assertEqual(flat.coefficient((7,)), 42)
        self.assertEqual(flat.coefficient((5, 1, 1)), 16)

    def test_pkp_matches_oracle(self) -> None:
        for m in range(2, 5):
            for g in range(0, 3):
                for h in range(0, 3):
                    exp = pkp_eI(g, h, m)
                    self.assertTrue(exp.is_positive(), (g, h, m))
                    self.assertEqual(exp.flatten(), oracle(pkp(g, h, m)), (g, h, m))

    def test_kkp_golden(self) -> None:
        flat = kkp_eI(1, 5, 3).flatten()
        self.assertEqual(flat.coefficient((9,)), 2160)
        self.assertEqual(flat.coefficient((8, 1)), 3216)
        self.assertEqual(flat.coefficient((6, 3)), 144)

    def test_kkp_smallest_case_is_p3(self) -> None:
        self.assertEqual(kkp_eI(1, 1, 1).flatten(), 3 * e(3) + e(2, 1))
        self.assertEqual(oracle(kkp(1, 1, 1)), 3 * e(3) + e(2, 1))

    def test_kkp_matches_oracle(self) -> None:
        for a in range(0, 2):
            for b in range(1, 5):
                for c in range(1, 4):
                    exp = kkp_eI(a, b, c)
                    self.assertTrue(exp.is_positive(), (a, b, c))
                    self.assertEqual(exp.flatten(), oracle(kkp(a, b, c)), (a, b, c))


if __name__ == "__main__":
    unittest.main()
