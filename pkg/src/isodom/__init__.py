"""Exact domination, total domination, irredundance and isolate parameters of small graphs."""

from .graph import (
    Graph,
    closed_neighborhood,
    complement,
    degree,
    diameter,
    distances_from,
    emit_graph6,
    has_dominating_vertex,
    induced_subgraph,
    is_connected,
    leaves_and_supports,
    open_neighborhood,
    parse_edge_list,
    parse_graph6,
)
from .solvers import PARAMETERS, ParameterReport, UndefinedParameter, compute_report, max_over, min_over

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "PARAMETERS",
    "ParameterReport",
    "UndefinedParameter",
    "closed_neighborhood",
    "complement",
    "compute_report",
    "degree",
    "diameter",
    "distances_from",
    "emit_graph6",
    "has_dominating_vertex",
    "induced_subgraph",
    "is_connected",
    "leaves_and_supports",
    "max_over",
    "min_over",
    "open_neighborhood",
    "parse_edge_list",
    "parse_graph6",
]
