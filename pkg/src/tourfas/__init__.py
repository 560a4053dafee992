"""Exact feedback arc set in tournaments via triangle census, indegree windows and subset DP."""

__version__ = "0.1.0"

from .tournament import (  # noqa: E402
    InputError,
    ParameterError,
    Tournament,
    backward_arcs,
    indegree,
    indegree_error_sum,
    indegree_order,
    is_acyclic,
    verify_fas,
)
from .solver import SolveResult, decide_k, solve  # noqa: E402

__all__ = [
    "InputError",
    "ParameterError",
    "SolveResult",
    "Tournament",
    "backward_arcs",
    "decide_k",
    "indegree",
    "indegree_error_sum",
    "indegree_order",
    "is_acyclic",
    "solve",
    "verify_fas",
]
