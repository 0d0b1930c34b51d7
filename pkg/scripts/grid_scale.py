"""Time H1 (best of R runs) on square grids up to 54x54 and compare with the
known optimum, which equals the side length."""

import argparse
import time

from vsmp.heuristics import run_protocol
from vsmp.instances import gen_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sides", type=int, nargs="+", default=[3, 10, 20, 30, 40, 54])
    ap.add_argument("--heuristic", default="h1")
    ap.add_argument("--runs", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'side':>5} {'n':>6} {'best':>5} {'mean':>7} {'optimum':>8} {'seconds':>8}")
    for k in args.sides:
        g = gen_grid(k, k)
        start = time.perf_counter()
        res = run_protocol(g, args.heuristic, args.runs, args.seed)
        secs = time.perf_counter() - start
        mean = sum(res.run_values) / len(res.run_values)
        print(f"{k:>5} {g.n:>6} {res.vs:>5} {mean:>7.2f} {k:>8} {secs:>8.2f}")


if __name__ == "__main__":
    main()
