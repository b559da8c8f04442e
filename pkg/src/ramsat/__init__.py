"""Ramsey numbers and clique-avoiding edge colorings via an embedded SAT solver.

The pipeline: a complete graph (optionally minus deleted edges) is encoded
as CNF over one variable per edge, a deterministic DPLL solver decides it,
and models decode back into red/blue colorings with no red K_s and no blue
K_t.  On top sit the classical-Ramsey-number search, the twin-vertex
extension that colors K_p minus one edge from a good coloring of K_{p-1},
and the minimal-deletion search.
"""

from .cnf import CnfFormula, decode, encode, export_dimacs
from .coloring import (
    Color,
    EdgeColoring,
    Verdict,
    brute_force_good_coloring,
    find_mono_clique,
    is_good,
    swap_colors,
)
from .document import ColoringDocument
from .dpll import DEFAULT_DECISION_BUDGET, SolveResult, SolveStatus, solve
from .errors import (
    BudgetExceededError,
    DocumentError,
    RamsatError,
    SearchExhaustedError,
    TheoremViolationError,
)
from .graphs import (
    DeletedEdgeGraph,
    Edge,
    edge,
    edge_count,
    edge_index,
    index_to_edge,
    k_subsets,
    subset_is_clique,
)
from .search import (
    DEFAULT_MAX_N,
    DeletionResult,
    RamseyQuery,
    RamseyResult,
    deletion_bound_check,
    extend_coloring,
    good_coloring,
    min_deletions,
    ramsey_number,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CnfFormula",
    "Color",
    "ColoringDocument",
    "DEFAULT_DECISION_BUDGET",
    "DEFAULT_MAX_N",
    "DeletedEdgeGraph",
    "DeletionResult",
    "DocumentError",
    "Edge",
    "EdgeColoring",
    "RamsatError",
    "RamseyQuery",
    "RamseyResult",
    "SearchExhaustedError",
    "SolveResult",
    "SolveStatus",
    "TheoremViolationError",
    "Verdict",
    "brute_force_good_coloring",
    "decode",
    "deletion_bound_check",
    "edge",
    "edge_count",
    "edge_index",
    "encode",
    "export_dimacs",
    "extend_coloring",
    "find_mono_clique",
    "good_coloring",
    "index_to_edge",
    "is_good",
    "k_subsets",
    "min_deletions",
    "ramsey_number",
    "solve",
    "subset_is_clique",
    "swap_colors",
]
