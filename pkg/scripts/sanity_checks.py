from __future__ import annotations

from pathlib import Path
import sys

from csfbench.report_io import load_jsonl


def main() -> int:
    path = Path(sys.argv[1] if len(sys.argv) > 1 else "artifacts/positivity.jsonl")
    if not path.exists():
        raise SystemExit(f"Missing {path}; run csfbench positivity first.")

    records = load_jsonl(path)
    if not records or records[-1].get("kind") != "summary":
        raise AssertionError(f"{path}: last record is not a summary")
    rows, summary = records[:-1], records[-1]

    if summary["total"] != len(rows):
        raise AssertionError(f"summary total {summary['total']} != {len(rows)} rows")

    # rows come out in canonical order: nondecreasing graph order
    orders = [r["order"] for r in rows]
    if orders != sorted(orders):
        raise AssertionError("positivity rows are not sorted by order")

    bad = [r["spec"] for r in rows if not r["positive"]]
    if bad:
        raise AssertionError(f"counterexamples: {bad}")
    if any(r["witness"] is not None for r in rows):
        raise AssertionError("positive row carries a witness")

    print("sanity_ok")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
