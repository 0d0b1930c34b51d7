"""Cut values and vertex separation of a layout.

A vertex ``u`` is counted at cut ``i`` when ``pos(u) <= i`` and some
neighbour sits strictly to the right of ``i``. Equivalently ``u`` is active
on the half-open interval ``[pos(u), last(u))`` where ``last(u)`` is the
rightmost neighbour position, which gives an O(n + m) sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPosition, SizeMismatch
from .graph import Graph, Layout


@dataclass(frozen=True)
class CutProfile:
    values: tuple[int, ...]  # values[i-1] is the cut after position i

    @property
    def vs(self) -> int:
        return max(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)


def _check_sizes(g: Graph, layout: Layout) -> None:
    if layout.n != g.n:
        raise SizeMismatch(f"layout has {layout.n} vertices, graph has {g.n}")


def cut_value(g: Graph, layout: Layout, i: int) -> int:
    _check_sizes(g, layout)
    if not (1 <= i <= g.n):
        raise InvalidPosition(f"cut position {i} not in 1..{g.n}")
    pos = layout.positions
    adj = g.adjacency
    count = 0
    for u in layout.order[:i]:
        for v in adj[u]:
            if pos[v] > i:
                count += 1
                break
    return count


def cut_profile(g: Graph, layout: Layout) -> CutProfile:
    _check_sizes(g, layout)
    n = g.n
    pos = layout.positions
    adj = g.adjacency
    diff = [0] * (n + 2)
    for u in range(1, n + 1):
        nb = adj[u]
        if not nb:
            continue
        p = pos[u]
        last = max(pos[v] for v in nb)
        if last > p:
            diff[p] += 1
            diff[last] -= 1
    values = []
    running = 0
    for i in range(1, n + 1):
        running += diff[i]
        values.append(running)
    return CutProfile(tuple(values))


def vertex_separation(g: Graph, layout: Layout) -> int:
    return cut_profile(g, layout).vs


def naive_cut_profile(g: Graph, layout: Layout) -> tuple[int, ...]:
    """Cut values straight from the set definition (slow reference)."""
    _check_sizes(g, layout)
    out = []
    for i in range(1, g.n + 1):
        left = set(layout.order[:i])
        right = set(layout.order[i:])
        out.append(sum(1 for u in left if any(v in right for v in g.neighbors(u))))
    return tuple(out)
