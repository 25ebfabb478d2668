"""Strong rainbow connection numbers of small graphs: exact search, constructive
colorings, structural classifiers and exhaustive validation campaigns."""

__version__ = "0.1.0"

from .coloring import EdgeColoring, Verdict, is_rainbow_connected, is_strongly_rainbow_connected
from .graph import Graph, emit_graph6, from_edge_list, parse_graph6
from .solver import SolveResult, rc_exact, src_exact

__all__ = [
    "EdgeColoring",
    "Graph",
    "SolveResult",
    "Verdict",
    "emit_graph6",
    "from_edge_list",
    "is_rainbow_connected",
    "is_strongly_rainbow_connected",
    "parse_graph6",
    "rc_exact",
    "src_exact",
]
