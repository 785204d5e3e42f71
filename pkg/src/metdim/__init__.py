"""Metric and edge metric dimension: lattice constructions, exact solvers and extremal checks."""

from .graph import (
    UNREACHABLE, DistanceTable, Edge, Graph, GraphError, all_pairs_distances, build_graph,
    distance_vector, edge_distance, edge_distance_vector, load_graph,
)
from .solver import (
    Certificate, edge_metric_dimension, greedy_resolving, is_edge_resolving, is_resolving,
    metric_dimension,
)

__version__ = "0.1.0"
