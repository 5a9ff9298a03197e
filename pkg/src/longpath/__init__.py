"""Greedy longest-path approximation for simple undirected graphs."""

from longpath.driver import (
    SolveConfig,
    SolveResult,
    improve,
    solve,
    solve_all_pairs,
    solve_farthest,
)
from longpath.graph_core import (
    UNREACHABLE,
    DistanceMap,
    Graph,
    GraphError,
    ParseError,
    Path,
    bfs_distances,
    components,
    generate,
    parse_dimacs,
    parse_edge_list,
    validate_path,
)
from longpath.oracle import (
    OracleLimits,
    OracleRefused,
    OracleTimeout,
    exact_from_pair,
    exact_longest_path,
)
from longpath.search import SearchOutcome, TieBreakPolicy, search
from longpath.weights import WeightedGraph, create

__all__ = [
    "UNREACHABLE",
    "DistanceMap",
    "Graph",
    "GraphError",
    "OracleLimits",
    "OracleRefused",
    "OracleTimeout",
    "ParseError",
    "Path",
    "SearchOutcome",
    "SolveConfig",
    "SolveResult",
    "TieBreakPolicy",
    "WeightedGraph",
    "bfs_distances",
    "components",
    "create",
    "exact_from_pair",
    "exact_longest_path",
    "generate",
    "improve",
    "parse_dimacs",
    "parse_edge_list",
    "search",
    "solve",
    "solve_all_pairs",
    "solve_farthest",
    "validate_path",
]
