from __future__ import annotations

import argparse
import logging
from pathlib import Path
import sys
from typing import Any

from .evaluator import (
    IDENTITY_NAMES,
    ConfigError,
    RunConfig,
    load_config,
    positivity_of_graph,
    positivity_scan,
    run_identity,
    verify,
)
from .graphs import underlying
from .oracle import csf_oracle
from .oracle_cache import ResourceGuardError
from .registry import FamilySpecError, parse_spec
from .report_io import load_graph, write_csv, write_jsonl
from .report_schema import Summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

_CONFIG_FLAGS = ("max_order", "workers", "cache_dir", "seed", "trials", "order")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, default=None, help="Oracle worker processes.")
    parser.add_argument("--cache-dir", default=None, help="Persist oracle results in this directory.")
    parser.add_argument("--format", choices=("json", "csv"), default="json", help="Report format on stdout.")
    parser.add_argument("--config", default=None, help="TOML file with a [run] table.")
    parser.add_argument("--log-level", default="WARNING", help="Logging level for stderr.")
    parser.add_argument("--progress", action="store_true", help="Show a progress bar on stderr.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csfbench",
        description="Chromatic symmetric functions: closed formulas, brute-force oracle, positivity scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Print the e-basis expansion of one graph.")
    target = compute.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", help="Family spec, e.g. kpc:a=4,b=2,c=4.")
    target.add_argument("--graph", help="Graph JSON file.")
    compute.add_argument(
        "--engine", choices=("formula", "oracle"), default=None,
        help="Default: formula for a family spec, oracle for a graph file.",
    )
    _common(compute)

    ver = sub.add_parser("verify", help="Compare a family's formula with the oracle over a grid.")
    ver.add_argument("--family", required=True, help="Family name, or triple-deletion / ap.")
    ver.add_argument("--grid", default=None, help="Parameter grid, e.g. m=2..4,g=0..2,h=0..2.")
    ver.add_argument("--max-order", type=int, default=None, help="Skip graphs with more vertices.")
    ver.add_argument("--trials", type=int, default=None, help="Randomized instances.")
    ver.add_argument("--order", type=int, default=None, help="Vertices per randomized instance.")
    ver.add_argument("--seed", type=int, default=None)
    _common(ver)

    pos = sub.add_parser("positivity", help="Scan graphs for e-positivity.")
    scan = pos.add_mutually_exclusive_group(required=True)
    scan.add_argument("--family", choices=("hatchain", "kayak"))
    scan.add_argument("--graph", help="Graph JSON file.")
    pos.add_argument("--max-order", type=int, default=None)
    _common(pos)

    ident = sub.add_parser("identity", help="Run an identity suite.")
    ident.add_argument("--name", required=True, choices=IDENTITY_NAMES)
    ident.add_argument("--max-order", type=int, default=None)
    ident.add_argument("--trials", type=int, default=None)
    ident.add_argument("--order", type=int, default=None)
    ident.add_argument("--seed", type=int, default=None)
    _common(ident)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    overrides = {k: getattr(args, k) for k in _CONFIG_FLAGS if getattr(args, k, None) is not None}
    cfg = RunConfig(**{**cfg.__dict__, **overrides})
    if cfg.workers < 1:
        raise ConfigError(f"workers must be >= 1, got {cfg.workers}")
    return cfg


def _emit(records: list[dict[str, Any]], summary: Summary | None, fmt: str) -> None:
    out = list(records)
    if summary is not None:
        out.append(summary.to_json())
    if fmt == "csv":
        write_csv(sys.stdout, out)
    else:
        write_jsonl(sys.stdout, out)


def _compute(args: argparse.Namespace) -> int:
    engine = args.engine or ("oracle" if args.graph else "formula")
    if args.graph:
        if engine != "oracle":
            raise FamilySpecError("a graph file can only be computed with --engine oracle")
        node = load_graph(args.graph)
        value, terms, label = csf_oracle(node), None, Path(args.graph).name
        order = underlying(node).n
    else:
        spec = parse_spec(args.family)
        label = str(spec)
        if engine == "oracle":
            graph = spec.graph()
            value, terms, order = csf_oracle(graph), None, graph.n
        else:
            value, terms = spec.evaluate(), spec.composition_terms()
            order = value.degree
    if args.format == "csv":
        write_csv(sys.stdout, [{"partition": str(p), "coeff": str(c)} for p, c in value.terms()])
        return EXIT_OK
    record: dict[str, Any] = {
        "kind": "compute",
        "target": label,
        "engine": engine,
        "degree": order,
        "csf": value.compact(),
    }
    if terms is not None:
        record["composition_terms"] = terms.to_json()
    write_jsonl(sys.stdout, [record])
    return EXIT_OK


def _dispatch(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.command == "compute":
        return _compute(args)
    if args.command == "verify":
        records, summary = verify(args.family, args.grid, config=cfg, progress=args.progress)
    elif args.command == "positivity":
        if args.graph:
            rows, summary = positivity_of_graph(Path(args.graph).name, load_graph(args.graph))
        else:
            rows, summary = positivity_scan(args.family, cfg.max_order, progress=args.progress)
        records = [r.to_json() for r in rows]
    else:
        reports, summary = run_identity(args.name, config=cfg, progress=args.progress)
        records = [r.to_json() for r in reports]
    _emit(records, summary, args.format)
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = _run_config(args)
        cfg.apply()
        return _dispatch(args, cfg)
    except ResourceGuardError as exc:
        logger.error("%s", exc)
        return EXIT_GUARD
    except (FamilySpecError, ConfigError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
