"""Graph burning: exact search, dense-graph, path-length and tree-length burners."""

from .burning import (
    BudgetExceeded,
    BurnReport,
    complete_schedule,
    exact_burning_number,
    lower_bound_diameter,
    simulate,
    verify,
)
from .decomposition import (
    Decomposition,
    InvalidDecompositionError,
    find_violation,
    length_of,
    path_hits_bags,
    separator_check,
    trim,
    validate,
)
from .dense import DenseBurnPlan, ball_lower_bound, burn_dense, greedy_separated_set
from .graph import UNREACHABLE, Graph, ball, bfs, is_connected, metrics
from .pathlength import burn_pathlen, grid_decomposition, path_burn_schedule
from .treelength import burn_guess, search_g_star

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "BurnReport",
    "Decomposition",
    "DenseBurnPlan",
    "Graph",
    "InvalidDecompositionError",
    "UNREACHABLE",
    "ball",
    "ball_lower_bound",
    "bfs",
    "burn_dense",
    "burn_guess",
    "burn_pathlen",
    "complete_schedule",
    "exact_burning_number",
    "find_violation",
    "greedy_separated_set",
    "grid_decomposition",
    "is_connected",
    "length_of",
    "lower_bound_diameter",
    "metrics",
    "path_burn_schedule",
    "path_hits_bags",
    "search_g_star",
    "separator_check",
    "simulate",
    "trim",
    "validate",
    "verify",
]
