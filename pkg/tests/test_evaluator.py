from __future__ import annotations

import contextlib
import io
import json
from pathlib import Path
import tempfile
import unittest

from csfbench.__main__ import EXIT_GUARD, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from csfbench.evaluator import (
    ConfigError,
    RunConfig,
    load_config,
    min_normalised,
    positivity_of_graph,
    positivity_scan,
    run_identity,
    verify,
    verify_family,
)
from csfbench.generators import hat_chain_specs, kayak_specs
from csfbench.graphs import hat
from csfbench.registry import FamilySpecError, get_family
from csfbench.report_io import write_graph
from csfbench.symfunc import e


class ConfigTests(unittest.TestCase):
    def test_defaults(self) -> None:
        cfg = RunConfig()
        self.assertEqual((cfg.max_order, cfg.workers, cfg.max_edges, cfg.trials), (10, 1, 30, 50))

    def test_toml_overrides(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "run.toml"
            path.write_text("[run]\nmax_order = 8\nseed = 4\n", encoding="utf-8")
            cfg = load_config(path)
            self.assertEqual((cfg.max_order, cfg.seed, cfg.trials), (8, 4, 50))

    def test_unknown_key(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "run.toml"
            path.write_text("[run]\ncolour = 3\n", encoding="utf-8")
            with self.assertRaises(ConfigError):
                load_config(path)


class VerifyTests(unittest.TestCase):
    def test_pkp_grid_passes(self) -> None:
        rows, summary = verify_family(get_family("pkp"), "m=2..3,g=0..1,h=0..1")
        self.assertEqual(summary.total, 8)
        self.assertTrue(summary.ok)
        self.assertTrue(all(r.negative_stored == 0 for r in rows))

    def test_invalid_tuples_are_skipped(self) -> None:
        rows, summary = verify_family(get_family("lollipop"), "n=3,a=1..5")
        self.assertEqual(len(rows), 3)
        self.assertEqual(summary.extra["skipped"], 2)

    def test_max_order_skips(self) -> None:
        rows, summary = verify_family(get_family("path"), "n=1..6", config=RunConfig(max_order=4))
        self.assertEqual([r.order for r in rows], [1, 2, 3, 4])
        self.assertEqual(summary.extra["skipped"], 2)

    def test_max_node_order_skips(self) -> None:
        rows, summary = verify_family(get_family("kpg"), "g=2,k=1,H=K1|K3|C4", config=RunConfig(max_node_order=3))
        self.assertEqual(sorted(r.spec for r in rows), ["kpg:g=2,k=1,H=K1", "kpg:g=2,k=1,H=K3"])
        self.assertEqual(summary.extra["skipped"], 1)

    def test_formula_errors_are_failed_rows(self) -> None:
        rows, summary = verify_family(get_family("spidertail"), "g=1,h=0,j=1,G=K1,H=K1")
        self.assertEqual(len(rows), 1)
        self.assertFalse(rows[0].passed)
        self.assertIn("h >= 1", rows[0].error)
        self.assertEqual(rows[0].to_json()["error"], rows[0].error)
        self.assertEqual((summary.failures, summary.extra["skipped"]), (1, 0))

    def test_hat_and_gch_grids_pass(self) -> None:
        for name, grid in (("hat", "g=0..1,m=2..5,h=0..1"), ("gch", "g=0..1,h=0..1,m=2..4,G=K1|K3,H=K2")):
            rows, summary = verify_family(get_family(name), grid)
            self.assertTrue(summary.ok, [r.spec for r in rows if not r.passed])

    def test_family_without_formula(self) -> None:
        with self.assertRaises(FamilySpecError):
            verify_family(get_family("kayak"))

    def test_randomized_identity_families(self) -> None:
        records, summary = verify("triple-deletion", config=RunConfig(trials=5, order=6))
        self.assertEqual(len(records), 5)
        self.assertTrue(summary.ok)


class PositivityTests(unittest.TestCase):
    def test_hat_chain_generator(self) -> None:
        specs = list(hat_chain_specs(5))
        self.assertEqual(len(specs), 8)
        orders = [s.graph().n for s in specs]
        self.assertEqual(orders, sorted(orders))
        self.assertLessEqual(max(orders), 5)

    def test_kayak_generator(self) -> None:
        self.assertEqual(
            [str(s) for s in kayak_specs(7)],
            ["kayak:g=3,h=3,k=1", "kayak:g=3,h=3,k=2", "kayak:g=3,h=4,k=1"],
        )

    def test_small_scans_are_positive(self) -> None:
        for family in ("hatchain", "kayak"):
            rows, summary = positivity_scan(family, 8)
            self.assertTrue(rows)
            self.assertEqual(summary.extra["counterexamples"], 0, family)

    def test_nonadjacent_hat_counterexample(self) -> None:
        rows, summary = positivity_of_graph("hat", hat(1, 4, 1, adjacent=False))
        self.assertFalse(summary.ok)
        self.assertEqual(rows[0].to_json()["witness"], {"partition": [4, 2], "coeff": "-2"})

    def test_min_normalised(self) -> None:
        self.assertEqual(min_normalised(4 * e(2) - 2 * e(1, 1)), -0.5)
        self.assertEqual(min_normalised(2 * e(2)), 1)


class IdentitySuiteTests(unittest.TestCase):
    def test_closed_form_suites(self) -> None:
        for name in ("f123", "convolution"):
            reports, summary = run_identity(name)
            self.assertTrue(summary.ok, name)
            self.assertEqual(len(reports), 1)

    def test_step_suites_respect_max_order(self) -> None:
        reports, summary = run_identity("kpg-step", config=RunConfig(max_order=6))
        self.assertTrue(reports)
        self.assertTrue(summary.ok)

    def test_unknown_identity(self) -> None:
        with self.assertRaises(FamilySpecError):
            run_identity("nosuch")


def run_cli(*argv: str) -> tuple[int, list[dict]]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = main(list(argv))
    lines = [json.loads(line) for line in out.getvalue().splitlines() if line.strip()]
    return code, lines


class CliTests(unittest.TestCase):
    def test_compute_trivial_path(self) -> None:
        code, lines = run_cli("compute", "--family", "path:n=1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[0]["csf"], {"1": "1"})

    def test_compute_kpc_formula(self) -> None:
        code, lines = run_cli("compute", "--family", "kpc:a=4,b=2,c=4", "--engine", "formula")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[0]["csf"]["54"], "558")
        self.assertEqual(lines[0]["csf"]["9"], "162")
        self.assertIn("composition_terms", lines[0])

    def test_compute_graph_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "k3.json"
            path.write_text(json.dumps({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}), encoding="utf-8")
            code, lines = run_cli("compute", "--graph", str(path), "--engine", "oracle")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[0]["csf"], {"3": "6"})

    def test_verify_emits_summary_last(self) -> None:
        code, lines = run_cli("verify", "--family", "kkp", "--grid", "a=0..1,b=1..2,c=1..2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[-1]["kind"], "summary")
        self.assertEqual(lines[-1]["failures"], 0)
        self.assertEqual(len(lines), 9)

    def test_positivity_graph_counterexample(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "nonadjacent_hat.json"
            write_graph(path, hat(1, 4, 1, adjacent=False))
            code, lines = run_cli("positivity", "--graph", str(path))
        self.assertEqual(code, EXIT_MISMATCH)
        self.assertEqual(lines[-1]["counterexamples"], 1)

    def test_exit_codes(self) -> None:
        self.assertEqual(run_cli("compute", "--family", "nosuch:n=1")[0], EXIT_USAGE)
        self.assertEqual(run_cli("compute", "--family", "kpc:a=4")[0], EXIT_USAGE)
        self.assertEqual(run_cli("compute", "--family", "lollipop:a=9,n=9", "--engine", "oracle")[0], EXIT_GUARD)

    def test_csv_format(self) -> None:
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = main(["identity", "--name", "f123", "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        rows = out.getvalue().splitlines()
        self.assertEqual(len(rows), 3)
        self.assertTrue(rows[0].startswith("check,"))


if __name__ == "__main__":
    unittest.main()
