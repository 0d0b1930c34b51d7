"""Exact minimum vertex separation for small graphs.

``optimal_vs`` runs the subset recurrence

    opt(S) = max(boundary(S), min_{v in S} opt(S - {v}))

over bitmasks, one cardinality layer at a time with numpy. Vertex ``v`` is
bit ``v - 1``. ``optimal_vs_exhaustive`` walks every ordering instead and is
kept as an independent check for tests.
"""

from __future__ import annotations

import numpy as np

from .errors import InstanceTooLarge
from .graph import Graph, Layout

DEFAULT_LIMIT = 20
EXHAUSTIVE_LIMIT = 9


def _neighbor_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u in g.vertices():
        for v in g.adjacency[u]:
            masks[u - 1] |= 1 << (v - 1)
    return masks


def boundary(g: Graph, s) -> int:
    """Vertices of ``s`` with a neighbour outside ``s``."""
    s = set(s)
    return sum(1 for u in s if any(v not in s for v in g.neighbors(u)))


def boundary_table(g: Graph) -> np.ndarray:
    """``boundary`` for every subset, indexed by bitmask."""
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    table = np.zeros(1 << n, dtype=np.int8)
    for i, nb in enumerate(_neighbor_masks(g)):
        inside = (masks >> i) & 1
        leaks = (nb & ~masks) != 0
        table += (inside.astype(bool) & leaks).astype(np.int8)
    return table


def optimal_vs(g: Graph, limit: int = DEFAULT_LIMIT) -> tuple[Layout, int]:
    """Return an optimal layout and its vertex separation."""
    n = g.n
    if n > limit:
        raise InstanceTooLarge(f"exact solver limited to n <= {limit}, got n={n}")
    size = 1 << n
    bnd = boundary_table(g)
    opt = np.full(size, np.iinfo(np.int8).max, dtype=np.int8)
    last = np.zeros(size, dtype=np.int8)  # bit index of the last-placed vertex
    opt[0] = 0
    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int8)
    for i in range(n):
        popcount += ((masks >> i) & 1).astype(np.int8)
    order = np.argsort(popcount, kind="stable")
    starts = np.searchsorted(popcount[order], np.arange(n + 2))
    for k in range(1, n + 1):
        layer = order[starts[k]:starts[k + 1]]
        best = np.full(layer.size, np.iinfo(np.int8).max, dtype=np.int8)
        arg = np.zeros(layer.size, dtype=np.int8)
        # ascending bit order with strict "<" keeps the smallest id on ties
        for i in range(n):
            has = ((layer >> i) & 1).astype(bool)
            cand = np.where(has, opt[layer & ~(1 << i)], np.iinfo(np.int8).max)
            better = cand < best
            best = np.where(better, cand, best)
            arg = np.where(better, i, arg)
        opt[layer] = np.maximum(best, bnd[layer])
        last[layer] = arg
    seq = []
    mask = size - 1
    while mask:
        i = int(last[mask])
        seq.append(i + 1)
        mask &= ~(1 << i)
    seq.reverse()
    return Layout(seq), int(opt[size - 1])


def optimal_vs_exhaustive(g: Graph) -> int:
    """Minimum vertex separation over all orderings, by depth-first search.

    Cut values are taken from their set definition at every prefix; a branch
    is abandoned once its running maximum cannot beat the best complete
    ordering found so far, which leaves the minimum unchanged.
    """
    n = g.n
    if n > EXHAUSTIVE_LIMIT:
        raise InstanceTooLarge(f"exhaustive search limited to n <= {EXHAUSTIVE_LIMIT}, got n={n}")
    adj = g.adjacency
    best = [n]
    prefix: list[int] = []
    used = [False] * (n + 1)

    def cut() -> int:
        left = set(prefix)
        return sum(1 for u in left if any(v not in left for v in adj[u]))

    def walk(running: int) -> None:
        if running >= best[0]:
            return
        if len(prefix) == n:
            best[0] = running
            return
        for v in range(1, n + 1):
            if not used[v]:
                used[v] = True
                prefix.append(v)
                walk(max(running, cut()))
                prefix.pop()
                used[v] = False

    # any layout scores at most n - 1, so n is a safe starting bound
    walk(0)
    return best[0]
