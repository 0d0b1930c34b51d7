"""Command-line entry point: ``solve``, ``bench`` and ``gen``."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import exact
from .bench import run_bench, solve_instance, write_csv
from .errors import VSMPError
from .heuristics import HEURISTICS
from .instances import format_edge_list, parse_instance_spec, parse_manifest


def _seed(text: str) -> int:
    value = int(text)
    if not (0 <= value < 2**64):
        raise argparse.ArgumentTypeError("seed must be in [0, 2**64)")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _heuristic_list(values: list[str]) -> list[str]:
    out = []
    for v in values:
        out.extend(p for p in v.split(",") if p)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vsmp", description="Vertex separation construction heuristics.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log per-instance progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one heuristic on one instance")
    p.add_argument("--instance", required=True,
                   help="family and params, e.g. 'grid 3 3', 'tree:12:7', or a file path")
    p.add_argument("--heuristic", default="h1", choices=sorted(HEURISTICS))
    p.add_argument("--runs", type=_positive, default=30)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--exact", action="store_true", help="also compute the optimum by subset DP")
    p.add_argument("--exact-limit", type=_positive, default=exact.DEFAULT_LIMIT)

    p = sub.add_parser("bench", help="run heuristics over a manifest and write CSV")
    p.add_argument("--manifest", required=True)
    p.add_argument("--heuristics", nargs="+", required=True, help="ids, space or comma separated")
    p.add_argument("--runs", type=_positive, default=30)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--report", help="also write the summary tables here")

    p = sub.add_parser("gen", help="write a generated instance as an edge list")
    p.add_argument("--family", required=True)
    p.add_argument("params", nargs="*", help="family parameters, e.g. rows cols for grid, n [seed] for tree")
    p.add_argument("--out", required=True)
    return parser


def cmd_solve(args) -> int:
    spec = parse_instance_spec(args.instance)
    g = spec.build()
    if args.exact and g.n > args.exact_limit:
        raise exact.InstanceTooLarge(f"--exact needs n <= {args.exact_limit}, instance has n={g.n}")
    run = solve_instance(g, spec.instance_id, spec.family, args.heuristic, args.runs, args.seed)
    print(f"instance  {run.instance_id}  n={g.n} m={g.m}")
    print(f"heuristic {run.heuristic}  runs={run.runs} seed={run.seed}")
    print(f"best_vs   {run.best_vs}")
    print(f"mean_vs   {run.mean_vs:.4f}")
    print(f"time_ms   {run.time_ms:.1f}")
    print("layout    " + " ".join(map(str, run.layout)))
    if args.exact:
        _layout, opt = exact.optimal_vs(g, limit=args.exact_limit)
        print(f"exact_vs  {opt}")
        print(f"gap       {run.best_vs - opt}")
    return 0


def cmd_bench(args, parser) -> int:
    heuristics = _heuristic_list(args.heuristics)
    if not heuristics:
        parser.error("bench: --heuristics needs at least one id")
    unknown = [h for h in heuristics if h not in HEURISTICS]
    if unknown:
        parser.error(f"bench: unknown heuristic(s) {', '.join(unknown)}; choose from {', '.join(HEURISTICS)}")
    with open(args.manifest, encoding="utf-8") as fh:
        manifest = parse_manifest(fh.read(), base_dir=os.path.dirname(os.path.abspath(args.manifest)))
    runs, report = run_bench(manifest, heuristics, args.runs, args.seed)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_csv(runs, fh)
    text = report.format()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    print(text, end="")
    return 0


def cmd_gen(args) -> int:
    spec = parse_instance_spec([args.family] + list(args.params))
    g = spec.build()
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comment=spec.instance_id))
    print(f"wrote {spec.instance_id} (n={g.n}, m={g.m}) to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "bench":
            return cmd_bench(args, parser)
        return cmd_gen(args)
    except (VSMPError, OSError) as exc:
        print(f"vsmp: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
