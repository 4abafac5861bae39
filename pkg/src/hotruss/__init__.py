"""Higher-order (k, tau)-truss decomposition."""

from .baseline import hot_decompose
from .bounds import BoundsTable, compute_ub, edge_centric_size, lower_bound, lower_bounds, vertex_centric_size
from .graph import EdgeListParseError, Graph, GraphError, load_edge_list
from .optimized import SelfCheckError, distances_changed, hot_decompose_plus
from .result import RunStats, TrussResult
from .support import SupportState, common_neighbors_tau, compute_all_supports, support_tau
from .topr import TopRResult, hot_top_r

__all__ = [
    "BoundsTable",
    "EdgeListParseError",
    "Graph",
    "GraphError",
    "RunStats",
    "SelfCheckError",
    "SupportState",
    "TopRResult",
    "TrussResult",
    "common_neighbors_tau",
    "compute_all_supports",
    "compute_ub",
    "distances_changed",
    "edge_centric_size",
    "hot_decompose",
    "hot_decompose_plus",
    "hot_top_r",
    "load_edge_list",
    "lower_bound",
    "lower_bounds",
    "support_tau",
    "vertex_centric_size",
]
