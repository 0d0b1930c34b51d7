"""Vertex separation of linear layouts: evaluator, construction heuristics,
exact small-instance solver, instance generators and a benchmark harness."""

from .errors import *  # noqa: F401,F403
from .graph import Graph, Layout, build_graph, build_layout, degree
from .separation import CutProfile, cut_profile, cut_value, vertex_separation
from .heuristics import (
    HEURISTICS,
    RandomSource,
    best_of_runs,
    construct_h1,
    construct_h2,
    construct_h3,
    random_layout,
    run_protocol,
)
from .exact import boundary, optimal_vs, optimal_vs_exhaustive
from .instances import (
    InstanceSpec,
    gen_complete,
    gen_cycle,
    gen_grid,
    gen_path,
    gen_random_tree,
    gen_star,
    parse_edge_list,
    parse_matrix_market,
)

__version__ = "0.1.0"
