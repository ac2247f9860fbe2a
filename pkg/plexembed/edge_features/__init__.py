from .operator_kind import HeuristicKind, OperatorKind
from .operators import EdgeOperators, OperatorError
from .heuristics import LinkHeuristics
