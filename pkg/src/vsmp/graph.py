"""Immutable undirected graphs and linear layouts.

Vertices are the dense identifiers ``1..n``. Position ``i`` of a layout is
also 1-based, so ``layout.vertex_at(layout.position_of(v)) == v``.
"""

from __future__ import annotations

import numbers
from typing import Iterable, Sequence

from .errors import InvalidPosition, InvalidVertex, NotABijection, SelfLoop


class Graph:
    """Undirected simple graph on vertices ``1..n``.

    Neighbour sets are frozen at construction; index 0 of the internal
    tables is an unused sentinel so that vertex ids index directly.
    """

    __slots__ = ("n", "m", "max_degree", "_adj", "_nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise InvalidVertex(f"graph needs at least one vertex, got n={n}")
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)
        self.m = sum(len(a) for a in adj) // 2
        self.max_degree = max(len(a) for a in adj)

    def _check(self, u: int) -> None:
        if not (isinstance(u, numbers.Integral) and 1 <= u <= self.n):
            raise InvalidVertex(f"vertex {u!r} not in 1..{self.n}")

    def neighbors(self, u: int) -> frozenset[int]:
        self._check(u)
        return self._adj[u]

    def sorted_neighbors(self, u: int) -> tuple[int, ...]:
        self._check(u)
        return self._nbrs[u]

    def degree(self, u: int) -> int:
        self._check(u)
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(1, self.n + 1) for v in self._nbrs[u] if u < v]

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex id (entry 0 is empty)."""
        return self._adj

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def degree(g: Graph, u: int) -> int:
    return g.degree(u)


class Layout:
    """A bijection between vertices ``1..n`` and positions ``1..n``."""

    __slots__ = ("_order", "_pos")

    def __init__(self, sequence: Sequence[int]):
        order = tuple(int(v) if isinstance(v, numbers.Integral) else v for v in sequence)
        n = len(order)
        pos = [0] * (n + 1)
        for i, v in enumerate(order, start=1):
            if not (isinstance(v, numbers.Integral) and 1 <= v <= n):
                raise NotABijection(f"vertex {v!r} at position {i} not in 1..{n}")
            if pos[v]:
                raise NotABijection(f"vertex {v} repeated at positions {pos[v]} and {i}")
            pos[v] = i
        self._order = order
        self._pos = tuple(pos)

    @property
    def n(self) -> int:
        return len(self._order)

    @property
    def order(self) -> tuple[int, ...]:
        return self._order

    def position_of(self, v: int) -> int:
        if not (1 <= v <= self.n):
            raise InvalidVertex(f"vertex {v} not in 1..{self.n}")
        return self._pos[v]

    def vertex_at(self, i: int) -> int:
        if not (1 <= i <= self.n):
            raise InvalidPosition(f"position {i} not in 1..{self.n}")
        return self._order[i - 1]

    @property
    def positions(self) -> tuple[int, ...]:
        """``positions[v]`` is the position of ``v``; entry 0 is unused."""
        return self._pos

    def __iter__(self):
        return iter(self._order)

    def __len__(self):
        return len(self._order)

    def __eq__(self, other):
        if not isinstance(other, Layout):
            return NotImplemented
        return self._order == other._order

    def __hash__(self):
        return hash(self._order)

    def __repr__(self):
        return f"Layout({list(self._order)})"


def build_layout(sequence: Sequence[int]) -> Layout:
    return Layout(sequence)
