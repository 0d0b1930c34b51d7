import networkx as nx
import pytest
from hypothesis import given, strategies as st

from vsmp import Graph
from vsmp.errors import InvalidParameter, InvalidVertex, ParseError, UnsupportedFormat
from vsmp.heuristics import RandomSource
from vsmp.instances import (
    InstanceSpec,
    format_edge_list,
    gen_complete,
    gen_cycle,
    gen_grid,
    gen_path,
    gen_random_tree,
    gen_star,
    parse_edge_list,
    parse_instance_spec,
    parse_manifest,
    parse_matrix_market,
    read_graph,
)

from conftest import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def test_grid_degenerate_and_counts():
    assert gen_grid(1, 6) == gen_path(6)
    assert nx.is_isomorphic(to_nx(gen_grid(2, 2)), to_nx(gen_cycle(4)))
    g = gen_grid(3, 3)
    assert (g.n, g.m) == (9, 12)


@pytest.mark.parametrize("a,b", [(2, 3), (3, 5), (4, 7)])
def test_grid_transpose_isomorphic(a, b):
    assert nx.is_isomorphic(to_nx(gen_grid(a, b)), to_nx(gen_grid(b, a)))


def test_small_families():
    assert gen_cycle(3) == gen_complete(3)
    assert gen_star(1) == gen_path(2)
    assert gen_complete(4).m == 6


@pytest.mark.parametrize("call", [
    lambda: gen_grid(0, 3), lambda: gen_grid(2, 0), lambda: gen_path(0),
    lambda: gen_cycle(2), lambda: gen_complete(0), lambda: gen_star(0),
    lambda: gen_random_tree(0, RandomSource(0)),
])
def test_bad_parameters(call):
    with pytest.raises(InvalidParameter):
        call()


def test_tiny_trees():
    assert gen_random_tree(1, RandomSource(0)).m == 0
    assert gen_random_tree(2, RandomSource(0)).edges() == [(1, 2)]


@given(st.integers(1, 80), st.integers(0, 2**64 - 1))
def test_random_tree_is_tree(n, seed):
    g = gen_random_tree(n, RandomSource(seed))
    assert g.m == n - 1
    assert nx.is_tree(to_nx(g))


def test_random_tree_covers_all_labelled_trees():
    # Cayley: 4^2 = 16 labelled trees on 4 vertices
    seen = {gen_random_tree(4, RandomSource(s)).edges().__repr__() for s in range(400)}
    assert len(seen) == 16


def test_edge_list():
    assert parse_edge_list("3 2\n1 2\n2 3") == gen_path(3)
    assert parse_edge_list("# comment\n\n3 2\n# more\n1 2\n2 3\n") == gen_path(3)
    assert parse_edge_list("2 1\n1 2\n1 2").m == 1


def test_edge_list_errors():
    with pytest.raises(ParseError) as err:
        parse_edge_list("2 1\nx y")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_edge_list("")
    with pytest.raises(ParseError):
        parse_edge_list("3\n1 2")
    with pytest.raises(ParseError) as err:
        parse_edge_list("3 2\n1 2\n1 2 3")
    assert err.value.line == 3
    with pytest.raises(InvalidVertex):
        parse_edge_list("3 1\n1 4")


@given(graphs(max_n=20))
def test_edge_list_round_trip(g):
    text = format_edge_list(g, comment="roundtrip")
    again = parse_edge_list(text)
    assert again == g
    assert format_edge_list(again, comment="roundtrip") == text


MM_SYM = """%%MatrixMarket matrix coordinate real symmetric
% a comment
3 3 3
1 1 4.0
2 1 -1.0
3 2 -1.0
"""


def test_matrix_market_symmetric():
    assert parse_matrix_market(MM_SYM) == gen_path(3)


def test_matrix_market_diagonal_only():
    g = parse_matrix_market("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n2 2\n")
    assert (g.n, g.m) == (3, 0)


def test_matrix_market_general_merges():
    text = "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 2 5\n2 1 5\n"
    assert parse_matrix_market(text).edges() == [(1, 2)]


def test_matrix_market_complex_fields():
    text = "%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 1.0 0.5\n"
    assert parse_matrix_market(text).m == 1


@pytest.mark.parametrize("text", [
    "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n",
    "%%MatrixMarket matrix coordinate real hermitian\n2 2 1\n1 2 1\n",
    "%MatrixMarket matrix coordinate real general\n2 2 1\n1 2 1\n",
    "%%MatrixMarket matrix coordinate real general\n2 3 1\n1 2 1\n",
])
def test_matrix_market_unsupported(text):
    with pytest.raises(UnsupportedFormat):
        parse_matrix_market(text)


def test_matrix_market_bad_entry():
    text = "%%MatrixMarket matrix coordinate real general\n3 3 2\n1 2 1.0\n2 x 1.0\n"
    with pytest.raises(ParseError) as err:
        parse_matrix_market(text)
    assert err.value.line == 4
    with pytest.raises(ParseError):
        parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n")
    with pytest.raises(InvalidVertex):
        parse_matrix_market("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n1 4\n")


def test_read_graph_sniffs(tmp_path):
    (tmp_path / "a.mtx").write_text(MM_SYM)
    (tmp_path / "b.txt").write_text("3 2\n1 2\n2 3\n")
    assert read_graph(str(tmp_path / "a.mtx")) == read_graph(str(tmp_path / "b.txt"))


def test_instance_specs(tmp_path):
    assert parse_instance_spec("grid 3 4").build() == gen_grid(3, 4)
    assert parse_instance_spec("grid:3x4").instance_id == "grid-3x4"
    assert parse_instance_spec("tree:12:7").build() == gen_random_tree(12, RandomSource(7))
    assert parse_instance_spec(["complete", "5"]).build() == gen_complete(5)
    p = tmp_path / "g.txt"
    p.write_text("2 1\n1 2\n")
    spec = parse_instance_spec(str(p))
    assert spec.family == "file" and spec.instance_id == "g"
    for bad in ["", "grid 3", "blob 4", "cycle 2", "path x", "tree 5 -1"]:
        with pytest.raises(InvalidParameter):
            parse_instance_spec(bad)


def test_manifest(tmp_path):
    (tmp_path / "hb.mtx").write_text(MM_SYM)
    text = "# class family params\nGrid grid 3 3\nTree tree 10 4\nHB hb.mtx\nHB file hb.mtx\n"
    entries = parse_manifest(text, base_dir=str(tmp_path))
    assert [c for c, _ in entries] == ["Grid", "Tree", "HB", "HB"]
    assert entries[2][1].build() == gen_path(3)
    assert entries[3][1] == entries[2][1]
    with pytest.raises(ParseError) as err:
        parse_manifest("Grid grid 3 3\nGrid\n")
    assert err.value.line == 2
