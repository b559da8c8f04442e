"""Ramsey-number search, coloring extension, and minimal deletion sets.

r(s,t) is the least p such that K_p has no good coloring for (s,t).  The
search here simply walks p = 1, 2, ... and asks the solver; it is meant
for the small classical numbers, so its default ceiling is n_max = 14.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .cnf import decode, encode
from .coloring import EdgeColoring, is_good
from .dpll import DEFAULT_DECISION_BUDGET, SolveStatus, solve
from .errors import BudgetExceededError, SearchExhaustedError, TheoremViolationError
from .graphs import DeletedEdgeGraph, Edge, edge_count, index_to_edge

DEFAULT_MAX_N = 14


@dataclass(frozen=True)
class RamseyQuery:
    """The pair (s, t): forbid red K_s and blue K_t."""

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise ValueError("clique sizes must be positive")


@dataclass(frozen=True)
class RamseyResult:
    """r(s,t) = p, with a good coloring of K_{p-1} unless p = 1."""

    p: int
    witness: Optional[EdgeColoring]


@dataclass(frozen=True)
class DeletionResult:
    """Minimal deletion count e, one minimal deletion set, and a coloring."""

    e: int
    deleted: tuple[Edge, ...]
    coloring: EdgeColoring


def good_coloring(
    n: int,
    s: int,
    t: int,
    deleted: tuple[Edge, ...] = (),
    *,
    budget: int = DEFAULT_DECISION_BUDGET,
) -> Optional[EdgeColoring]:
    """Find a good coloring of K_n minus the deleted edges, or None.

    Encodes, solves, decodes, and re-verifies the result with the
    subset-walking checker before returning it.  A budgeted-out solve
    raises BudgetExceededError rather than guessing.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    graph = DeletedEdgeGraph(n, tuple(deleted))
    result = solve(encode(graph, s, t), budget)
    if result.status is SolveStatus.BUDGET_EXCEEDED:
        raise BudgetExceededError(
            f"budget of {budget} decisions exceeded at n = {n}"
        )
    if result.status is SolveStatus.UNSAT:
        return None
    coloring = decode(result.model, graph)
    # a satisfiable encoding implies s, t >= 2, so the verifier applies
    verdict = is_good(coloring, s, t)
    if not verdict.good:
        raise TheoremViolationError(
            f"solver model for K_{n} decoded to a bad coloring: {verdict.witness}"
        )
    return coloring


def ramsey_number(
    query: RamseyQuery,
    n_max: int = DEFAULT_MAX_N,
    *,
    budget: int = DEFAULT_DECISION_BUDGET,
) -> RamseyResult:
    """Walk n = 1, 2, ..., n_max until K_n has no good coloring.

    The witness is the good coloring found at p - 1 (None when p = 1,
    where K_0... there is nothing to color: a red K_1 needs only a vertex).
    Raises SearchExhaustedError if every n up to n_max still has a good
    coloring, and lets the solver's BudgetExceededError (which names n)
    propagate.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    witness = None
    for n in range(1, n_max + 1):
        coloring = good_coloring(n, query.s, query.t, budget=budget)
        if coloring is None:
            return RamseyResult(n, witness)
        witness = coloring
    raise SearchExhaustedError(
        f"r({query.s},{query.t}) > {n_max}: every K_n up to {n_max} has a good coloring"
    )


def extend_coloring(
    coloring: EdgeColoring, vertex: int, s: int, t: int
) -> EdgeColoring:
    """Grow a good coloring of K_{p-1} to one of K_p minus one edge.

    The new vertex p-1 is a twin of `vertex`: every edge (q, p-1) copies
    the color of (q, vertex), and the edge (vertex, p-1) between the twins
    is the deleted one.  No clique of the result contains both twins, so
    any monochromatic clique would map back into the input coloring; the
    output is therefore good whenever the input is, and is re-verified
    anyway.  A failed re-verification is an internal contradiction and
    raises TheoremViolationError.
    """
    graph = coloring.graph
    if graph.deleted:
        raise ValueError("extension starts from a complete graph")
    old_p = graph.p
    if not 0 <= vertex < old_p:
        raise ValueError(f"vertex {vertex} is not a vertex of K_{old_p}")
    verdict = is_good(coloring, s, t)
    if not verdict.good:
        color, clique = verdict.witness
        raise ValueError(
            f"input coloring is not good: {color.value} clique on {clique}"
        )
    twin = old_p
    extended_graph = DeletedEdgeGraph(old_p + 1, ((vertex, twin),))
    assignment = dict(coloring.assignment)
    for q in range(old_p):
        if q == vertex:
            continue
        assignment[(q, twin)] = coloring.assignment[
            (vertex, q) if vertex < q else (q, vertex)
        ]
    extended = EdgeColoring(extended_graph, assignment)
    check = is_good(extended, s, t)
    if not check.good:
        raise TheoremViolationError(
            f"twin extension of vertex {vertex} produced a bad coloring: "
            f"{check.witness}"
        )
    return extended


def min_deletions(
    query: RamseyQuery,
    p: int,
    k_max: int,
    *,
    budget: int = DEFAULT_DECISION_BUDGET,
) -> DeletionResult:
    """Fewest deletions from K_p that admit a good coloring, up to k_max.

    Deletion sets of each size are tried in lexicographic order of edge
    indices, so the reported set is the first minimal one.  Raises
    SearchExhaustedError when k_max deletions are still not enough.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    m = edge_count(p)
    if not 0 <= k_max <= m:
        raise ValueError(f"k_max must be between 0 and {m}")
    for k in range(k_max + 1):
        for indices in combinations(range(m), k):
            deleted = tuple(index_to_edge(i, p) for i in indices)
            coloring = good_coloring(p, query.s, query.t, deleted, budget=budget)
            if coloring is not None:
                return DeletionResult(k, deleted, coloring)
    raise SearchExhaustedError(
        f"no deletion set of size <= {k_max} admits a good coloring of K_{p}"
    )


def deletion_bound_check(result: DeletionResult, p: int) -> bool:
    """Whether the minimal deletion count satisfies 1 <= e <= p - 1.

    The bound applies when p is the Ramsey number of the query: at least
    one deletion is needed (K_p itself has no good coloring) and deleting
    the p - 1 edges at one vertex strands it, reducing to a colorable
    K_{p-1} plus an isolated vertex.
    """
    return 1 <= result.e <= p - 1
