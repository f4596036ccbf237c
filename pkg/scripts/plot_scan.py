"""Plot the smallest normalised e-coefficient per order from positivity scans.

Usage: python scripts/plot_scan.py artifacts/positivity_hatchain.jsonl [more.jsonl ...]
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from pathlib import Path
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from csfbench.report_io import load_jsonl


def margins(path: Path) -> dict[int, float]:
    """Order -> smallest min_normalised over the graphs of that order."""

    best: dict[int, Fraction] = {}
    for r in load_jsonl(path):
        if r.get("kind") != "positivity":
            continue
        value = Fraction(r["min_normalised"])
        order = int(r["order"])
        if order not in best or value < best[order]:
            best[order] = value
    return {k: float(v) for k, v in sorted(best.items())}


def main() -> int:
    paths = [Path(p) for p in sys.argv[1:]] or sorted(Path("artifacts").glob("positivity_*.jsonl"))
    if not paths:
        raise SystemExit("no positivity reports; run csfbench positivity > artifacts/positivity_<family>.jsonl")

    series: dict[str, dict[int, float]] = defaultdict(dict)
    for path in paths:
        series[path.stem] = margins(path)

    fig = plt.figure(figsize=(6, 4))
    for label, data in sorted(series.items()):
        plt.plot(list(data), list(data.values()), "o-", label=label)
    plt.axhline(0.0, color="grey", linewidth=0.8)
    plt.xlabel("graph order")
    plt.ylabel("min coefficient / max |coefficient|")
    plt.legend()
    fig.tight_layout()

    out_path = Path("artifacts/positivity_margins.png")
    out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out_path, dpi=120)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
