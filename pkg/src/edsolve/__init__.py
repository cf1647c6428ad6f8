"""Exact parameterized edge dominating set solvers and their reductions."""

from .eds import Report, solve_eds
from .eds1 import solve_eds1
from .graph import Graph, MatrixInstance, Solution, is_eds, parse_graph, parse_matrix
from .kernel import kernel_stats, kernelize, lift_solution, solve_with_kernel
from .matching import maximum_matching, min_cied
from .reductions import eds_to_maximal_matching, solve_matrix_domination, solve_mmm

__all__ = [
    "Graph", "MatrixInstance", "Report", "Solution",
    "eds_to_maximal_matching", "is_eds", "kernel_stats", "kernelize", "lift_solution",
    "maximum_matching", "min_cied", "parse_graph", "parse_matrix",
    "solve_eds", "solve_eds1", "solve_matrix_domination", "solve_mmm", "solve_with_kernel",
]
