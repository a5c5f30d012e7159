"""Gamma-graphs (reconfiguration graphs of minimum dominating sets) of small graphs."""

from ._accel import BACKEND
from .canon import are_isomorphic, canonical_form, contains_induced
from .domination import (
    DominationReport,
    PrivateNeighborhood,
    closed_neighborhood,
    domination_number,
    enumerate_gamma_sets,
    is_dominating,
    open_neighborhood,
    private_neighbors,
)
from .gammagraph import GammaGraph, Model, as_graph, build_gamma_graph, jump_adjacent, slide_adjacent
from .generate import generate_graphs, generate_trees
from .graph import (
    Bipartition,
    Graph,
    GraphError,
    bipartition,
    diameter,
    is_connected,
    is_triangle_free,
    max_degree,
    named_graph,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .search import SearchOutcome, disconnected_gamma_graph_census, realizability_search, verify_main_theorem
from .verify import BoundReport, TreeStats, check_obs_bipn, check_obs_spn, check_tree_bounds, run_suite, tree_stats

__version__ = "0.1.0"
