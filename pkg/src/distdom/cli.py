"""Command-line entry point: analyze | verify-chain | generate | bench."""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .chain import (CSV_COLUMNS, AnalyzeConfig, ChainReport, CorpusInstance,
                    analyze, default_corpus)
from .graph import load_graph, to_json
from .instances import (build_h_r, clique_hypergraph, covering_hard_hypergraph,
                        grid_graph, random_degenerate_graph)
from .oracles import OracleBudget

CSV_HEADER_COMMENT = "# distdom chain-report v1"


def _budget_from_args(args) -> OracleBudget:
    env = os.environ.get("DISTDOM_BUDGET_VERTICES")
    max_v = args.budget if args.budget is not None else (int(env) if env else 14)
    return OracleBudget(max_vertices=max_v)


def _config_from_args(args) -> AnalyzeConfig:
    mode = None
    if getattr(args, "exact", None) is True:
        mode = "exact-rational"
    elif getattr(args, "exact", None) is False:
        mode = "float"
    return AnalyzeConfig(
        ordering_strategy=args.strategy,
        mode=mode,
        oracle_budget=_budget_from_args(args),
        keep_sets=getattr(args, "keep_sets", False),
    )


def _write_csv(reports: list[ChainReport], stream, with_timing: bool = True) -> None:
    cols = CSV_COLUMNS if with_timing else CSV_COLUMNS[:-1]
    stream.write(CSV_HEADER_COMMENT + " columns: " + ",".join(cols) + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(cols)
    for rep in sorted(reports, key=lambda r: r.instance_id):
        writer.writerow(rep.csv_row(with_timing=with_timing))


def _analyze_one(pair):
    inst, cfg = pair
    return analyze(inst, cfg)


def _run_many(instances, cfg: AnalyzeConfig, workers: int) -> list[ChainReport]:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_analyze_one, [(i, cfg) for i in instances]))
    else:
        reports = [analyze(inst, cfg) for inst in instances]
    return sorted(reports, key=lambda r: r.instance_id)


def _load_corpus(args, allow_empty: bool = False) -> list[CorpusInstance]:
    if args.corpus:
        instances = []
        for name in sorted(os.listdir(args.corpus)):
            if not name.endswith(".json"):
                continue
            path = os.path.join(args.corpus, name)
            instances.append(CorpusInstance(name[:-5], load_graph(path), args.r))
        if not instances and not allow_empty:
            raise SystemExit(f"no .json graphs found in {args.corpus}")
        return instances
    return default_corpus(args.seed)


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    inst = CorpusInstance(os.path.basename(args.graph), g, args.r)
    rep = analyze(inst, _config_from_args(args))
    if args.format == "csv":
        _write_csv([rep], sys.stdout)
    else:
        print(rep.to_json())
    return 0 if rep.all_ok() else 1


def cmd_verify_chain(args) -> int:
    instances = _load_corpus(args)
    cfg = _config_from_args(args)
    reports = _run_many(instances, cfg, args.workers)
    out = io.StringIO()
    _write_csv(reports, out)
    text = out.getvalue()
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    failed = [rep for rep in reports if not rep.all_ok()]
    for rep in failed:
        sys.stderr.write(rep.to_json() + "\n")
    return 1 if failed else 0


def cmd_generate(args) -> int:
    if args.family == "grid":
        payload = to_json(grid_graph(args.rows, args.cols))
    elif args.family == "random-degenerate":
        g, orient = random_degenerate_graph(args.n, args.d, args.seed)
        payload = to_json(g, {"orientation": [list(e) for e in orient], "d": args.d})
    elif args.family == "clique-hr":
        payload = build_h_r(clique_hypergraph(args.n), args.r).to_json()
    elif args.family == "covering-hard":
        payload = build_h_r(covering_hard_hypergraph(args.n), args.r).to_json()
    elif args.family == "subdivided-clique":
        payload = build_h_r(clique_hypergraph(args.n), args.r).to_json()
    else:
        raise SystemExit(f"unknown family {args.family!r}")
    if args.out:
        with open(args.out, "w") as f:
            f.write(payload + "\n")
    else:
        print(payload)
    return 0


def cmd_bench(args) -> int:
    instances = _load_corpus(args, allow_empty=True)
    cfg = _config_from_args(args)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["# rep", "id", "n", "r", "b", "gamma_star", "xn",
                     "achieved_ratio", "bound", "y1", "t_ms"])
    ok = True
    for rep_i in range(args.repetitions):
        for report in _run_many(instances, cfg, args.workers):
            achieved = (report.xn_size / float(report.gamma_star)
                        if report.gamma_star else 0.0)
            ok &= achieved <= report.b + 1e-9
            writer.writerow([
                rep_i, report.instance_id, report.n, report.r, report.b,
                str(report.gamma_star), report.xn_size,
                f"{achieved:.4f}", report.b, report.y1_size,
                round(sum(report.timings.values()), 2),
            ])
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distdom",
        description="LP-rounding approximations of distance domination and "
                    "independence, with machine-checked inequality chains.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, oracle=True):
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--strategy", default="degeneracy",
                       choices=["degeneracy", "descending-degree", "input-order"])
        p.add_argument("--exact", action=argparse.BooleanOptionalAction,
                       default=None,
                       help="force exact-rational (or float) LP mode; "
                            "default: exact below 200 vertices")
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--budget", type=int, default=None,
                       help="oracle vertex budget (env DISTDOM_BUDGET_VERTICES)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--format", default="json", choices=["json", "csv"])

    p = sub.add_parser("analyze", help="run the full pipeline on one graph")
    p.add_argument("graph")
    p.add_argument("--keep-sets", action="store_true")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-chain",
                       help="verify the inequality chain over a corpus")
    p.add_argument("--corpus", default=None,
                   help="directory of .json graphs; default: built-in corpus")
    p.add_argument("--out", default=None, help="CSV output path")
    common(p)
    p.set_defaults(func=cmd_verify_chain)

    p = sub.add_parser("generate", help="emit a benchmark instance as JSON")
    p.add_argument("family", choices=["grid", "random-degenerate", "clique-hr",
                                      "covering-hard", "subdivided-clique"])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int, default=3)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="timings and achieved ratios over a corpus")
    p.add_argument("--corpus", default=None)
    p.add_argument("--repetitions", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
