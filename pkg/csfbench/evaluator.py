from __future__ import annotations

from dataclasses import dataclass, fields, replace
from fractions import Fraction
from itertools import product
import logging
from pathlib import Path
import sys
import tomllib
from typing import Any, Iterable, Iterator

from tqdm import tqdm

from .generators import InstanceConfig, hat_chain_specs, kayak_specs, random_ap_instances, random_triple_instances
from .goldens import check_goldens
from .graphs import Node, underlying
from .identities import check_ap, check_convolution, check_cpg_step, check_f123, check_kpg_step, check_triple_deletion
from .oracle import configure_oracle, csf_oracle
from .oracle_cache import OracleCache, ResourceGuard
from .registry import Family, FamilySpec, FamilySpecError, NodeToken, expand_grid, get_family, parse_node
from .report_schema import CheckReport, PositivityRow, Summary, VerifyRow, residual_terms
from .symfunc import SymFuncE, is_e_positive

logger = logging.getLogger(__name__)

IDENTITY_NAMES = ("f123", "convolution", "triple-deletion", "ap", "kpg-step", "cpg-step", "goldens")
SCAN_FAMILIES = ("hatchain", "kayak")
_STEP_NODES = ("K1", "K2", "K3", "C4", "P3")


class ConfigError(ValueError):
    """Malformed run configuration file."""


@dataclass(frozen=True)
class RunConfig:
    max_order: int = 10
    max_node_order: int = 5
    workers: int = 1
    cache_dir: str | None = None
    max_edges: int = 30
    max_poly_vertices: int = 12
    seed: int = 0
    trials: int = 50
    order: int = 7

    def guard(self) -> ResourceGuard:
        return ResourceGuard(max_edges=self.max_edges, max_poly_vertices=self.max_poly_vertices)

    def instances(self) -> InstanceConfig:
        return InstanceConfig(trials=self.trials, order=self.order, seed=self.seed)

    def apply(self) -> None:
        """Install this config's cache, guard and worker count as the oracle defaults."""

        cache = OracleCache(Path(self.cache_dir) if self.cache_dir else None)
        configure_oracle(cache=cache, guard=self.guard(), workers=self.workers)


def load_config(path: str | Path, base: RunConfig | None = None) -> RunConfig:
    """Overlay the ``[run]`` table of a TOML file on ``base``."""

    file_path = Path(path)
    try:
        with file_path.open("rb") as f:
            data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"cannot read config {file_path}: {exc}") from exc
    run = data.get("run", {})
    if not isinstance(run, dict):
        raise ConfigError(f"{file_path}: [run] must be a table")
    known = {f.name: f for f in fields(RunConfig)}
    unknown = sorted(set(run) - set(known))
    if unknown:
        raise ConfigError(f"{file_path}: unknown [run] key(s) {unknown}")
    for key, value in run.items():
        if key == "cache_dir":
            if not isinstance(value, str):
                raise ConfigError(f"{file_path}: cache_dir must be a string")
        elif not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f"{file_path}: {key} must be an integer, got {value!r}")
    return replace(base or RunConfig(), **run)


def _progress(items: list, *, desc: str, enabled: bool) -> Iterable:
    if not enabled:
        return items
    return tqdm(items, desc=desc, file=sys.stderr, ncols=80, leave=False)


def _node_order(spec: FamilySpec) -> int:
    """Largest node graph among the spec's node parameters, 0 if it has none."""

    orders = [0]
    for value in spec.params.values():
        tokens = value if isinstance(value, tuple) else (value,)
        orders.extend(t.node.n for t in tokens if isinstance(t, NodeToken))
    return max(orders)


def _negative_stored(spec: FamilySpec) -> int:
    expansion = spec.composition_terms()
    return 0 if expansion is None else len(expansion.negative_terms())


def verify_family(
    family: Family,
    grid: str | None = None,
    *,
    config: RunConfig = RunConfig(),
    progress: bool = False,
) -> tuple[list[VerifyRow], Summary]:
    """Formula against oracle on every valid tuple of a grid.

    Tuples whose graph cannot be built, or that exceed ``max_order`` or
    ``max_node_order``, are skipped and counted in the summary. A formula
    that raises on a buildable graph is a failed row.
    """

    if family.formula is None:
        raise FamilySpecError(f"family {family.name} has no formula to verify; use positivity")
    specs = list(expand_grid(family, grid))
    rows: list[VerifyRow] = []
    skipped = 0
    for spec in _progress(specs, desc=f"verify {family.name}", enabled=progress):
        try:
            graph = spec.graph()
        except ValueError as exc:
            logger.debug("skipping %s: %s", spec, exc)
            skipped += 1
            continue
        if graph.n > config.max_order or _node_order(spec) > config.max_node_order:
            skipped += 1
            continue
        try:
            value = spec.evaluate()
            negative = _negative_stored(spec)
        except ValueError as exc:
            logger.warning("formula for %s raised: %s", spec, exc)
            rows.append(VerifyRow(
                family=family.name,
                spec=str(spec),
                order=graph.n,
                edges=graph.edge_count,
                passed=False,
                error=str(exc),
            ))
            continue
        truth = csf_oracle(graph)
        residual = residual_terms(value, truth)
        if residual:
            logger.warning("formula and oracle disagree on %s", spec)
        if negative:
            logger.warning("%s stores %d negative e_I coefficient(s)", spec, negative)
        rows.append(VerifyRow(
            family=family.name,
            spec=str(spec),
            order=graph.n,
            edges=graph.edge_count,
            passed=not residual and not negative,
            residual_terms=residual,
            negative_stored=negative,
        ))
    failures = sum(1 for r in rows if not r.passed)
    summary = Summary("verify", len(rows), failures, {"family": family.name, "skipped": skipped})
    return rows, summary


def min_normalised(f: SymFuncE) -> Fraction:
    """Smallest e-coefficient divided by the largest absolute one."""

    coeffs = [c for _, c in f.terms()]
    if not coeffs:
        return Fraction(0)
    return min(coeffs) / max(abs(c) for c in coeffs)


def scan_row(family: str, label: str, node: Node) -> PositivityRow:
    graph = underlying(node)
    value = csf_oracle(graph)
    verdict = is_e_positive(value)
    if not verdict.positive:
        part, coeff = verdict.witness
        logger.warning("%s is not e-positive: e_%s has coefficient %s", label, part, coeff)
    return PositivityRow(
        family=family,
        spec=label,
        order=graph.n,
        positive=verdict.positive,
        witness=verdict.witness,
        min_normalised=min_normalised(value),
    )


def scan_specs(family: str, max_order: int) -> Iterator[FamilySpec]:
    if family == "hatchain":
        return hat_chain_specs(max_order)
    if family == "kayak":
        return kayak_specs(max_order)
    raise FamilySpecError(f"no positivity generator for {family!r}; choose from {list(SCAN_FAMILIES)}")


def positivity_scan(
    family: str,
    max_order: int,
    *,
    progress: bool = False,
) -> tuple[list[PositivityRow], Summary]:
    specs = list(scan_specs(family, max_order))
    rows = [
        scan_row(family, str(spec), spec.graph())
        for spec in _progress(specs, desc=f"positivity {family}", enabled=progress)
    ]
    return rows, _scan_summary(rows, {"family": family, "max_order": max_order})


def positivity_of_graph(label: str, node: Node) -> tuple[list[PositivityRow], Summary]:
    rows = [scan_row("graph", label, node)]
    return rows, _scan_summary(rows, {"family": "graph"})


def _scan_summary(rows: list[PositivityRow], extra: dict[str, Any]) -> Summary:
    counterexamples = sum(1 for r in rows if not r.positive)
    return Summary("positivity", len(rows), counterexamples, {**extra, "counterexamples": counterexamples})


def _step_checks(name: str, config: RunConfig) -> list[CheckReport]:
    check, g_range = (check_kpg_step, range(2, 5)) if name == "kpg-step" else (check_cpg_step, range(3, 6))
    reports = []
    for g, k, token in product(g_range, range(0, 3), _STEP_NODES):
        node = parse_node(token).node
        if g + k + node.n > config.max_order:
            continue
        reports.append(check(g, k, node))
    return reports


def run_identity(name: str, *, config: RunConfig = RunConfig(), progress: bool = False) -> tuple[list[CheckReport], Summary]:
    if name == "f123":
        reports = [check_f123()]
    elif name == "convolution":
        reports = [check_convolution()]
    elif name == "triple-deletion":
        instances = random_triple_instances(config.instances())
        reports = [
            check_triple_deletion(inst.graph, inst.triple)
            for inst in _progress(instances, desc=name, enabled=progress)
        ]
    elif name == "ap":
        instances = random_ap_instances(config.instances())
        reports = [
            check_ap(inst.graph, inst.tribe, inst.x, inst.mode)
            for inst in _progress(instances, desc=name, enabled=progress)
        ]
    elif name in ("kpg-step", "cpg-step"):
        reports = _step_checks(name, config)
    elif name == "goldens":
        reports = check_goldens()
    else:
        raise FamilySpecError(f"unknown identity {name!r}; choose from {list(IDENTITY_NAMES)}")
    failures = sum(1 for r in reports if not r.passed)
    return reports, Summary("identity", len(reports), failures, {"identity": name})


def verify(name: str, grid: str | None = None, *, config: RunConfig = RunConfig(), progress: bool = False):
    """Dispatch ``verify --family``: randomized identity suites or a formula family."""

    if name in ("triple-deletion", "ap"):
        reports, summary = run_identity(name, config=config, progress=progress)
        return [r.to_json() for r in reports], summary
    rows, summary = verify_family(get_family(name), grid, config=config, progress=progress)
    return [r.to_json() for r in rows], summary
