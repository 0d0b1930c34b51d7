"""Greedy construction heuristics for vertex separation.

All constructors share the signature ``(graph, rng) -> Layout`` and grow a
layout left to right. The motivation common to ``h2``/``h3`` is that
neighbours placed close together are counted in fewer cuts, and that
low-degree vertices should go first.

Tie rules where the published steps are silent:

* ``h1``: the starting minimum-degree vertex and the final pick from ``Q``
  are both drawn uniformly with ``rng``.
* ``h2``/``h3``: every tie goes to the smallest vertex id, so these two are
  deterministic and ignore ``rng``.
"""

from __future__ import annotations

import hashlib
import heapq
import random
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from .errors import InvalidParameter, UnknownHeuristic
from .graph import Graph, Layout
from .separation import vertex_separation


class RandomSource:
    """Seeded stream of uniform draws; same seed, same sequence."""

    def __init__(self, seed: int = 0):
        if not (0 <= seed < 2**64):
            raise InvalidParameter(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        self._rng = random.Random(seed)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        return self._rng.randrange(k)

    def choice(self, items):
        return items[self._rng.randrange(len(items))]

    def permutation(self, n: int) -> list[int]:
        """Uniform permutation of ``1..n``."""
        perm = list(range(1, n + 1))
        self._rng.shuffle(perm)
        return perm


def derive_seed(master_seed: int, run: int) -> int:
    """Seed for run ``run`` of a best-of-R batch.

    First 8 bytes (little endian) of BLAKE2b over ``"<master>/<run>"``.
    """
    digest = hashlib.blake2b(f"{master_seed}/{run}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


@dataclass
class PartialLayoutState:
    """Working state shared by the constructors.

    ``remaining_degree[w]`` is ``|N(w) \\ layout|`` and is updated as each
    vertex is placed.
    """

    graph: Graph
    layout: list[int] = field(default_factory=list)
    unvisited: set[int] = field(default_factory=set)
    remaining_degree: list[int] = field(default_factory=list)
    placed: list[bool] = field(default_factory=list)

    @classmethod
    def start(cls, g: Graph) -> "PartialLayoutState":
        return cls(
            graph=g,
            unvisited=set(g.vertices()),
            remaining_degree=[len(a) for a in g.adjacency],
            placed=[False] * (g.n + 1),
        )

    def place(self, v: int) -> None:
        self.placed[v] = True
        self.unvisited.remove(v)
        self.layout.append(v)
        rem = self.remaining_degree
        for w in self.graph.adjacency[v]:
            rem[w] -= 1

    def complete(self) -> bool:
        return len(self.layout) == self.graph.n

    def snapshot(self) -> "PartialLayoutState":
        return PartialLayoutState(
            graph=self.graph,
            layout=list(self.layout),
            unvisited=set(self.unvisited),
            remaining_degree=list(self.remaining_degree),
            placed=list(self.placed),
        )


StepHook = Callable[[PartialLayoutState, list, int], None]


def construct_h1(g: Graph, rng: RandomSource, on_step: Optional[StepHook] = None) -> Layout:
    """Place the unvisited vertex that best closes the current frontier.

    Each step takes ``S``, the placed vertices with the fewest (but at
    least one) unvisited neighbours; ``P``, the unvisited vertices adjacent
    to the most members of ``S``; then ``Q``, the members of ``P`` with the
    fewest unvisited neighbours, and picks from ``Q`` at random. When no
    placed vertex has an unvisited neighbour (component finished), ``P`` is
    all of ``unvisited``.

    ``on_step(state, Q, chosen)`` is called before each placement after the
    first; ``Q`` is sorted.
    """
    st = PartialLayoutState.start(g)
    adj = g.adjacency
    rem = st.remaining_degree
    placed = st.placed

    min_deg = min(rem[1:])
    first = [v for v in g.vertices() if rem[v] == min_deg]
    v = rng.choice(first)
    st.place(v)
    # placed vertices that still have an unvisited neighbour
    active = {v} if rem[v] > 0 else set()

    while not st.complete():
        if active:
            least = min(rem[u] for u in active)
            counts: dict[int, int] = {}
            for s in active:
                if rem[s] == least:
                    for w in adj[s]:
                        if not placed[w]:
                            counts[w] = counts.get(w, 0) + 1
            most = max(counts.values())
            P = [w for w, c in counts.items() if c == most]
        else:
            P = list(st.unvisited)
        fewest = min(rem[w] for w in P)
        Q = sorted(w for w in P if rem[w] == fewest)
        v = rng.choice(Q)
        if on_step is not None:
            on_step(st.snapshot(), Q, v)
        st.place(v)
        for w in adj[v]:
            if placed[w] and rem[w] == 0:
                active.discard(w)
        if rem[v] > 0:
            active.add(v)
    return Layout(st.layout)


class _LeastRemaining:
    """Lazy min-heap over ``(remaining_degree, vertex)`` for positive degrees."""

    def __init__(self, rem: list[int]):
        self.rem = rem
        self.heap = [(d, v) for v, d in enumerate(rem) if v and d > 0]
        heapq.heapify(self.heap)

    def touched(self, w: int) -> None:
        if self.rem[w] > 0:
            heapq.heappush(self.heap, (self.rem[w], w))

    def pop_least(self) -> Optional[int]:
        heap, rem = self.heap, self.rem
        while heap:
            d, v = heap[0]
            if rem[v] == d:
                return v
            heapq.heappop(heap)
        return None


def _sweep_construct(g: Graph, prefer_leftmost: bool, on_step: Optional[StepHook]) -> Layout:
    st = PartialLayoutState.start(g)
    adj = g.adjacency
    rem = st.remaining_degree
    placed = st.placed
    deg = [len(a) for a in adj]
    least = _LeastRemaining(rem)
    # stall fallback order: original degree, then id
    by_degree = sorted(g.vertices(), key=lambda v: (deg[v], v))
    fallback_at = 0
    leftmost = 0

    def put(v):
        if on_step is not None:
            on_step(st.snapshot(), [v], v)
        st.place(v)
        for w in adj[v]:
            least.touched(w)

    u = by_degree[0]
    put(u)
    for w in sorted(adj[u], key=lambda w: (deg[w], w)):
        put(w)

    while not st.complete():
        v = None
        if prefer_leftmost:
            layout = st.layout
            while leftmost < len(layout) and rem[layout[leftmost]] == 0:
                leftmost += 1
            if leftmost < len(layout):
                v = layout[leftmost]
        if v is None:
            v = least.pop_least()
        if v is None:
            while placed[by_degree[fallback_at]]:
                fallback_at += 1
            put(by_degree[fallback_at])
            continue
        if not placed[v]:
            put(v)
        fresh = sorted((w for w in adj[v] if not placed[w]), key=lambda w: (rem[w], w))
        for w in fresh:
            put(w)
    return Layout(st.layout)


def construct_h2(g: Graph, rng: Optional[RandomSource] = None, on_step: Optional[StepHook] = None) -> Layout:
    """Sweep outward from a minimum-degree vertex.

    Repeatedly take the vertex with the least non-zero count of unplaced
    neighbours and append those neighbours, fewest-remaining first.
    """
    return _sweep_construct(g, prefer_leftmost=False, on_step=on_step)


def construct_h3(g: Graph, rng: Optional[RandomSource] = None, on_step: Optional[StepHook] = None) -> Layout:
    """Like :func:`construct_h2`, but expand the leftmost placed vertex that
    still has unplaced neighbours; falls back to the ``h2`` rule when none
    does."""
    return _sweep_construct(g, prefer_leftmost=True, on_step=on_step)


def random_layout(g: Graph, rng: RandomSource) -> Layout:
    return Layout(rng.permutation(g.n))


HEURISTICS: dict[str, Callable[[Graph, RandomSource], Layout]] = {
    "h1": construct_h1,
    "h2": construct_h2,
    "h3": construct_h3,
    "random": random_layout,
}


def get_heuristic(name: str) -> Callable[[Graph, RandomSource], Layout]:
    try:
        return HEURISTICS[name]
    except KeyError:
        raise UnknownHeuristic(f"unknown heuristic {name!r}; choose from {', '.join(HEURISTICS)}") from None


class ProtocolResult(NamedTuple):
    layout: Layout
    vs: int
    run_values: tuple[int, ...]
    best_run: int


def run_protocol(g: Graph, heuristic: str, runs: int = 30, master_seed: int = 0) -> ProtocolResult:
    """Run ``heuristic`` ``runs`` times and keep the lowest separation.

    Run ``i`` is seeded with ``derive_seed(master_seed, i)``; on equal
    separation the earliest run wins.
    """
    construct = get_heuristic(heuristic)
    if runs < 1:
        raise InvalidParameter(f"runs must be >= 1, got {runs}")
    best = None
    values = []
    for i in range(runs):
        layout = construct(g, RandomSource(derive_seed(master_seed, i)))
        vs = vertex_separation(g, layout)
        values.append(vs)
        if best is None or vs < best[1]:
            best = (layout, vs, i)
    return ProtocolResult(best[0], best[1], tuple(values), best[2])


def best_of_runs(g: Graph, heuristic: str, runs: int = 30, master_seed: int = 0) -> tuple[Layout, int]:
    res = run_protocol(g, heuristic, runs, master_seed)
    return res.layout, res.vs
