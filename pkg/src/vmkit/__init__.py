"""vmkit: exact vertex-minor calculus over GF(2).

Cut-rank and GF(2) linear algebra, local complementation and pivoting,
rank-depth / rank-width / linear rank-width, binary matroid branch-
depth, and a desk-scale verification harness behind the ``vmkit`` CLI.
"""

from vmkit._kernels import BACKEND
from vmkit.canonical import (
    CanonicalGraph,
    canonical_form,
    canonical_key,
    contains_induced,
    graphs_up_to,
    is_isomorphic,
    nonisomorphic_graphs,
)
from vmkit.coloring import chromatic_number, clique_number
from vmkit.gf2 import BitMatrix, cut_rank, cutrank_table, rank
from vmkit.graph6 import parse_graph6, write_graph6
from vmkit.graphs import Graph, generate, half_graph
from vmkit.matroids import (
    BinaryMatroid,
    branch_depth,
    cycle_matroid,
    dual,
    fundamental_graph,
    has_matroid_minor,
    is_matroid_isomorphic,
    matroid_minor,
)
from vmkit.vm import (
    MinorSearch,
    Orbit,
    apply_ops,
    format_script,
    has_pivot_minor,
    has_vertex_minor,
    local_complement,
    orbit,
    parse_script,
    pivot,
)
from vmkit.width import (
    ConnectivitySystem,
    Decomposition,
    RankDecomposition,
    balance_partition,
    decomposition_width,
    linear_rank_width,
    linear_rank_width_ordering,
    merge_decomposition,
    node_width,
    radius,
    rank_depth,
    rank_depth_decomposition,
    rank_width,
    rank_width_decomposition,
    serialize_tree,
    parse_tree,
    system_depth,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinaryMatroid",
    "BitMatrix",
    "CanonicalGraph",
    "ConnectivitySystem",
    "Decomposition",
    "Graph",
    "MinorSearch",
    "Orbit",
    "RankDecomposition",
    "apply_ops",
    "balance_partition",
    "branch_depth",
    "canonical_form",
    "canonical_key",
    "chromatic_number",
    "clique_number",
    "contains_induced",
    "cut_rank",
    "cutrank_table",
    "cycle_matroid",
    "decomposition_width",
    "dual",
    "format_script",
    "fundamental_graph",
    "generate",
    "graphs_up_to",
    "half_graph",
    "has_matroid_minor",
    "has_pivot_minor",
    "has_vertex_minor",
    "is_isomorphic",
    "is_matroid_isomorphic",
    "linear_rank_width",
    "linear_rank_width_ordering",
    "local_complement",
    "matroid_minor",
    "merge_decomposition",
    "node_width",
    "nonisomorphic_graphs",
    "orbit",
    "parse_graph6",
    "parse_script",
    "parse_tree",
    "pivot",
    "radius",
    "rank",
    "rank_depth",
    "rank_depth_decomposition",
    "rank_width",
    "rank_width_decomposition",
    "serialize_tree",
    "system_depth",
    "write_graph6",
]
