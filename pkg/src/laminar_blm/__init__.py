"""Budgeted laminar matroid independent set: exact DP, approximation scheme, oracle."""

from .dp import (
    UNREACHABLE,
    DecompositionNode,
    DpTable,
    NodeKind,
    Solution,
    backtrack,
    best_feasible,
    compute_dp,
    convolve,
    singleton_table,
)
from .estimator import LaminarKnapsackSolver
from .exceptions import BLMError, InstanceError, OracleLimitError, ParseError, UnreachableCellError, ValidationError
from .formats import parse_instance, read_instance, serialize_instance, write_instance
from .fptas import RoundingContext, preprocess, round_profits, solve, solve_exact
from .generators import gen_special
from .matroid import (
    Element,
    FamilySet,
    LaminarInstance,
    canonicalize,
    find_maximal_set,
    is_independent,
    make_instance,
    partitioned_instance,
    restrict_difference,
    restrict_intersection,
    validate_laminar,
)
from .oracle import enumerate_opt, enumerate_table
from .validation import check_epsilon, check_instance

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "BLMError",
    "DecompositionNode",
    "DpTable",
    "Element",
    "FamilySet",
    "InstanceError",
    "LaminarInstance",
    "LaminarKnapsackSolver",
    "NodeKind",
    "OracleLimitError",
    "ParseError",
    "RoundingContext",
    "Solution",
    "UnreachableCellError",
    "ValidationError",
    "backtrack",
    "best_feasible",
    "canonicalize",
    "check_epsilon",
    "check_instance",
    "compute_dp",
    "convolve",
    "enumerate_opt",
    "enumerate_table",
    "find_maximal_set",
    "gen_special",
    "is_independent",
    "make_instance",
    "parse_instance",
    "partitioned_instance",
    "preprocess",
    "read_instance",
    "restrict_difference",
    "restrict_intersection",
    "round_profits",
    "serialize_instance",
    "singleton_table",
    "solve",
    "solve_exact",
    "validate_laminar",
    "write_instance",
]
