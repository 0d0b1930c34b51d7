import random

import pytest
from hypothesis import strategies as st

from vsmp import Graph, Layout

# Fig. 1 layout is (2,4,3,5,1) with separation 3. Only the caption survives in
# text form, so this edge set is a reconstruction consistent with that value.
FIG1_EDGES = [(1, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]
FIG1_LAYOUT = (2, 4, 3, 5, 1)


@pytest.fixture
def fig1_graph():
    return Graph(5, FIG1_EDGES)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph(n, edges)


def random_graphs(seed: int, count: int, max_n: int, min_n: int = 1):
    """Deterministic mix of densities from empty to complete."""
    rng = random.Random(seed)
    densities = [0.0, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0]
    for k in range(count):
        n = rng.randint(min_n, max_n)
        yield random_graph(rng, n, densities[k % len(densities)])


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pairs, max_size=n * (n - 1) // 2 + 3))
    return Graph(n, edges)


@st.composite
def graphs_with_layout(draw, min_n=1, max_n=12):
    g = draw(graphs(min_n, max_n))
    order = draw(st.permutations(list(range(1, g.n + 1))))
    return g, Layout(order)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
