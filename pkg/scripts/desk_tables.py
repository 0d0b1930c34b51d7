"""Reproduce the shape of the heuristic comparison tables on generated grids
and random trees.

    python scripts/desk_tables.py --runs 30 --seed 0 --out desk.csv
"""

import argparse
import logging

from vsmp.bench import run_bench, write_csv
from vsmp.instances import InstanceSpec


def build_manifest(n_grids, n_trees, seed):
    entries = []
    sides = [(r, c) for r in range(2, 12) for c in range(r, r + 4)]
    for r, c in sides[:n_grids]:
        entries.append(("Grid", InstanceSpec("grid", (r, c))))
    for k in range(n_trees):
        n = 20 + 10 * k
        entries.append(("Tree", InstanceSpec("tree", (n, seed + k))))
    return entries


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grids", type=int, default=20)
    ap.add_argument("--trees", type=int, default=20)
    ap.add_argument("--runs", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--heuristics", default="h1,h2,h3,random")
    ap.add_argument("--out", default="desk_tables.csv")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    manifest = build_manifest(args.grids, args.trees, args.seed)
    runs, report = run_bench(manifest, args.heuristics.split(","), args.runs, args.seed)
    with open(args.out, "w", newline="") as fh:
        write_csv(runs, fh)
    print(report.format(), end="")
    print(f"\n{len(runs)} rows written to {args.out}")


if __name__ == "__main__":
    main()
