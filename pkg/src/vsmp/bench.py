"""Best-of-R benchmark protocol and its tabular reports.

Every (instance, heuristic) pair is run ``runs`` times with seeds derived
from the master seed; the best separation is kept. Reports come in two
shapes: average best separation per instance class, and the number of
instances on which each heuristic attains the lowest best separation (ties
credit every tied heuristic).
"""

from __future__ import annotations

import csv
import io
import logging
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DuplicateRun, InstanceFailed, InvalidParameter, VSMPError
from .graph import Graph, Layout
from .heuristics import get_heuristic, run_protocol
from .instances import InstanceSpec

log = logging.getLogger(__name__)

CSV_COLUMNS = ["instance_id", "class", "n", "m", "heuristic", "seed", "runs", "best_vs", "mean_vs", "time_ms"]
TIMING_COLUMNS = {"time_ms"}


@dataclass
class HeuristicRun:
    instance_id: str
    instance_class: str
    heuristic: str
    seed: int
    runs: int
    best_vs: int
    mean_vs: float
    time_ms: float
    n: int = 0
    m: int = 0
    layout: Optional[Layout] = field(default=None, repr=False, compare=False)

    def csv_row(self) -> list[str]:
        return [
            self.instance_id,
            self.instance_class,
            str(self.n),
            str(self.m),
            self.heuristic,
            str(self.seed),
            str(self.runs),
            str(self.best_vs),
            f"{self.mean_vs:.4f}",
            f"{self.time_ms:.1f}",
        ]


def solve_instance(g: Graph, instance_id: str, instance_class: str, heuristic: str,
                   runs: int, seed: int) -> HeuristicRun:
    start = time.perf_counter()
    res = run_protocol(g, heuristic, runs, seed)
    elapsed = (time.perf_counter() - start) * 1000.0
    return HeuristicRun(
        instance_id=instance_id,
        instance_class=instance_class,
        heuristic=heuristic,
        seed=seed,
        runs=runs,
        best_vs=res.vs,
        mean_vs=sum(res.run_values) / len(res.run_values),
        time_ms=elapsed,
        n=g.n,
        m=g.m,
        layout=res.layout,
    )


@dataclass
class BenchReport:
    classes: list[str]
    heuristics: list[str]
    class_sizes: dict[str, int]
    average: dict[tuple[str, str], float]  # (heuristic, class) -> mean best VS
    overall_average: dict[str, float]
    best_count: dict[tuple[str, str], int]  # (heuristic, class) -> instances won

    def best_sum(self, heuristic: str) -> int:
        return sum(self.best_count[(heuristic, c)] for c in self.classes)

    def format(self) -> str:
        heads = [f"{c}({self.class_sizes[c]})" for c in self.classes]
        width = max([len("Heuristic")] + [len(h) for h in self.heuristics])
        colw = max([9] + [len(h) for h in heads])

        def row(cells):
            return "  ".join([cells[0].ljust(width)] + [c.rjust(colw) for c in cells[1:]])

        lines = ["Average vertex separation (best of runs)", row(["Heuristic"] + heads + ["Average"])]
        for h in self.heuristics:
            vals = [f"{self.average[(h, c)]:.2f}" for c in self.classes]
            lines.append(row([h] + vals + [f"{self.overall_average[h]:.2f}"]))
        lines += ["", "Number of best solutions", row(["Heuristic"] + heads + ["Sum"])]
        for h in self.heuristics:
            vals = [str(self.best_count[(h, c)]) for c in self.classes]
            lines.append(row([h] + vals + [str(self.best_sum(h))]))
        return "\n".join(lines) + "\n"


def summarize(runs: Sequence[HeuristicRun]) -> BenchReport:
    if not runs:
        raise InvalidParameter("no runs to summarize")
    seen = set()
    classes: list[str] = []
    heuristics: list[str] = []
    per_instance: dict[tuple[str, str], dict[str, int]] = {}
    for r in runs:
        key = (r.instance_id, r.heuristic)
        if key in seen:
            raise DuplicateRun(f"instance {r.instance_id!r} has two runs for heuristic {r.heuristic!r}")
        seen.add(key)
        if r.instance_class not in classes:
            classes.append(r.instance_class)
        if r.heuristic not in heuristics:
            heuristics.append(r.heuristic)
        per_instance.setdefault((r.instance_class, r.instance_id), {})[r.heuristic] = r.best_vs

    class_sizes = {c: 0 for c in classes}
    sums = {(h, c): 0 for h in heuristics for c in classes}
    counts = {(h, c): 0 for h in heuristics for c in classes}
    best_count = {(h, c): 0 for h in heuristics for c in classes}
    for (cls, _iid), by_h in per_instance.items():
        class_sizes[cls] += 1
        low = min(by_h.values())
        for h, vs in by_h.items():
            sums[(h, cls)] += vs
            counts[(h, cls)] += 1
            if vs == low:
                best_count[(h, cls)] += 1

    average = {k: (sums[k] / counts[k] if counts[k] else float("nan")) for k in sums}
    overall = {}
    for h in heuristics:
        total = sum(counts[(h, c)] for c in classes)
        overall[h] = sum(sums[(h, c)] for c in classes) / total if total else float("nan")
    return BenchReport(classes, heuristics, class_sizes, average, overall, best_count)


def run_bench(manifest: Iterable[tuple[str, InstanceSpec]], heuristics: Sequence[str],
              runs: int = 30, seed: int = 0) -> tuple[list[HeuristicRun], BenchReport]:
    """Run every heuristic on every manifest instance.

    All instances use ``seed`` as their master seed. Any failure is
    re-raised with the failing instance named.
    """
    if not heuristics:
        raise InvalidParameter("at least one heuristic is required")
    for h in heuristics:
        get_heuristic(h)
    results = []
    for cls, spec in manifest:
        iid = spec.instance_id
        try:
            g = spec.build()
            for h in heuristics:
                r = solve_instance(g, iid, cls, h, runs, seed)
                log.info("%s %s best=%d mean=%.2f %.0fms", iid, h, r.best_vs, r.mean_vs, r.time_ms)
                results.append(r)
        except (VSMPError, OSError) as exc:
            raise InstanceFailed(iid, exc) from exc
    return results, summarize(results)


def write_csv(runs: Sequence[HeuristicRun], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in runs:
        w.writerow(r.csv_row())


def csv_text(runs: Sequence[HeuristicRun]) -> str:
    buf = io.StringIO()
    write_csv(runs, buf)
    return buf.getvalue()


def strip_timing(text: str) -> list[list[str]]:
    """CSV rows with wall-time columns removed, for determinism checks."""
    rows = list(csv.reader(io.StringIO(text)))
    keep = [i for i, name in enumerate(rows[0]) if name not in TIMING_COLUMNS]
    return [[row[i] for i in keep] for row in rows]
