#!/usr/bin/env python3
"""Run the full inequality-chain verification over the built-in corpus and
print a short summary on top of the CSV artifact."""
import argparse
import csv
import sys
import time

from distdom.chain import AnalyzeConfig, default_corpus
from distdom.cli import _run_many, _write_csv
from distdom.oracles import OracleBudget


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--budget", type=int, default=14)
    ap.add_argument("--out", default="chain-report.csv")
    args = ap.parse_args()

    cfg = AnalyzeConfig(oracle_budget=OracleBudget(max_vertices=args.budget))
    t0 = time.perf_counter()
    reports = _run_many(default_corpus(args.seed), cfg, args.workers)
    elapsed = time.perf_counter() - t0

    with open(args.out, "w") as f:
        _write_csv(reports, f)

    failed = [r for r in reports if not r.all_ok()]
    print(f"{len(reports)} instances in {elapsed:.1f}s -> {args.out}")
    slowest = max(reports, key=lambda r: sum(r.timings.values()))
    print(f"slowest: {slowest.instance_id} "
          f"({sum(slowest.timings.values()) / 1000:.1f}s)")
    if failed:
        print(f"FAILED: {', '.join(r.instance_id for r in failed)}")
        return 1
    print("all inequality chains hold")
    return 0


if __name__ == "__main__":
    sys.exit(main())
