#!/usr/bin/env python3
"""Compare ordering strategies by the weak coloring numbers they achieve.

The rounding factor is governed by wcol_k of whatever ordering feeds the
augmentation, so a strategy that shaves wcol_k directly shaves the
guarantee.  On small graphs the exhaustive oracle shows how far each
heuristic sits from the true wcol_k.
"""
import argparse
import sys

from distdom.instances import grid_graph, random_degenerate_graph
from distdom.oracles import BudgetExceeded, OracleBudget, brute_wcol
from distdom.ordering import heuristic_ordering, wcol_of_ordering

STRATEGIES = ("degeneracy", "descending-degree", "input-order")


def instances(seed):
    yield "grid-3x3", grid_graph(3, 3)
    yield "grid-4x5", grid_graph(4, 5)
    for d in (1, 2, 3):
        for n in (8, 20, 50):
            yield f"rdeg-d{d}-n{n}", random_degenerate_graph(n, d, seed + n)[0]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args()

    header = ["instance", "k"] + list(STRATEGIES) + ["exact"]
    print("\t".join(header))
    for name, g in instances(args.seed):
        for k in range(1, args.kmax + 1):
            row = [name, str(k)]
            for strategy in STRATEGIES:
                ordering = heuristic_ordering(g, strategy)
                row.append(str(wcol_of_ordering(g, ordering, k)))
            try:
                row.append(str(brute_wcol(g, k, OracleBudget(max_vertices=8)).value))
            except BudgetExceeded:
                row.append("-")
            print("\t".join(row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
