"""Recognize (P6, diamond, K4)-free graphs and color them with at most six colors."""

from .errors import (ClassViolation, GraphFormatError, HexachromeError, HypothesisViolation,
                     OracleUndecided, PreconditionError)
from .graph import Graph, complement, disjoint_union, induced_subgraph, join, mycielskian
from .formats import parse_graph, parse_graph6, write_graph6
from .recognition import Pattern, classify, find_induced
from .oracle import chromatic_number, is_k_colorable, max_clique, verify_coloring
from .engine import color_p2p3, color_p6

__version__ = "0.1.0"

__all__ = [
    "ClassViolation", "GraphFormatError", "HexachromeError", "HypothesisViolation",
    "OracleUndecided", "PreconditionError",
    "Graph", "complement", "disjoint_union", "induced_subgraph", "join", "mycielskian",
    "parse_graph", "parse_graph6", "write_graph6",
    "Pattern", "classify", "find_induced",
    "chromatic_number", "is_k_colorable", "max_clique", "verify_coloring",
    "color_p2p3", "color_p6",
]
