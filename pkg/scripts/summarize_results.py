from __future__ import annotations

import csv
from collections import defaultdict
from pathlib import Path
import sys


def load_rows(path: Path) -> list[dict[str, str]]:
    with path.open(newline="", encoding="utf-8") as f:
        return [r for r in csv.DictReader(f) if r.get("kind") == "verify"]


def make_table(rows: list[dict[str, str]]) -> str:
    by_family: dict[str, list[dict[str, str]]] = defaultdict(list)
    for r in rows:
        by_family[r["family"]].append(r)

    out: list[str] = []
    out.append("| family | tuples | pass | fail | max order | max edges |")
    out.append("|---|---|---|---|---|---|")
    for family in sorted(by_family):
        group = by_family[family]
        passed = sum(1 for r in group if r["pass"] == "True")
        out.append(
            f"| {family} | {len(group)} | {passed} | {len(group) - passed} | "
            f"{max(int(r['order']) for r in group)} | {max(int(r['edges']) for r in group)} |"
        )
    out.append("")
    return "\n".join(out)


def main() -> int:
    paths = [Path(p) for p in sys.argv[1:]] or sorted(Path("artifacts").glob("verify_*.csv"))
    if not paths:
        raise SystemExit("no verify CSVs; run csfbench verify --format csv > artifacts/verify_<family>.csv")

    rows = [r for p in paths for r in load_rows(p)]
    failing = [r for r in rows if r["pass"] != "True"]

    out_lines: list[str] = ["# Verification summary", "", make_table(rows)]
    if failing:
        out_lines.append("## Failing tuples")
        out_lines.extend(f"- `{r['spec']}`" for r in failing)

    out_path = Path("artifacts/RESULTS_SUMMARY.md")
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(out_lines).strip() + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
