"""Red/blue edge colorings and the monochromatic-clique verifier.

A coloring is *good* for (s, t) when no s vertices span an all-red clique
and no t vertices span an all-blue clique.  Vertex subsets containing a
deleted edge are not cliques and never count as witnesses.

The verifier here is deliberately independent of the CNF machinery: it
walks vertex subsets directly, and `brute_force_good_coloring` enumerates
raw colorings.  Both serve as oracles for the solver pipeline.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional

from .errors import BudgetExceededError
from .graphs import DeletedEdgeGraph, Edge, k_subsets, subset_is_clique

# Largest edge count brute_force_good_coloring will enumerate (2^24 words).
ENUMERATION_LIMIT = 24


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def opposite(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class EdgeColoring:
    """A total assignment of colors to the present edges of a graph."""

    graph: DeletedEdgeGraph
    assignment: Mapping[Edge, Color]

    def __post_init__(self) -> None:
        present = set(self.graph.present_edges())
        given = set(self.assignment)
        if given != present:
            missing = sorted(present - given)
            extra = sorted(given - present)
            if missing:
                raise ValueError(f"coloring misses present edge {missing[0]}")
            raise ValueError(f"coloring assigns non-present edge {extra[0]}")

    def color_of(self, e: Edge) -> Color:
        return self.assignment[e]

    def edges_of_color(self, color: Color) -> list[Edge]:
        """Edges of one color, in lexicographic order."""
        return [e for e in self.graph.present_edges() if self.assignment[e] is color]


def swap_colors(coloring: EdgeColoring) -> EdgeColoring:
    """Red becomes blue and vice versa; exchanges the roles of s and t."""
    return EdgeColoring(
        coloring.graph,
        {e: c.opposite for e, c in coloring.assignment.items()},
    )


@dataclass(frozen=True)
class Verdict:
    """Outcome of a goodness check; bad verdicts carry one witness clique."""

    good: bool
    witness: Optional[tuple[Color, tuple[int, ...]]] = None


def find_mono_clique(
    coloring: EdgeColoring, color: Color, k: int
) -> Optional[tuple[int, ...]]:
    """Lexicographically first k-subset spanning a monochromatic clique.

    Returns None when there is none.  A single vertex is a clique of either
    color, so k = 1 always finds (0,) on a non-empty graph.
    """
    if k < 1:
        raise ValueError("clique size must be at least 1")
    graph = coloring.graph
    assignment = coloring.assignment
    for subset in k_subsets(graph.p, k):
        if not subset_is_clique(graph, subset):
            continue
        if all(assignment[pair] is color for pair in combinations(subset, 2)):
            return subset
    return None


def is_good(coloring: EdgeColoring, s: int, t: int) -> Verdict:
    """Check for red K_s and blue K_t; red witnesses take priority."""
    if s < 2 or t < 2:
        raise ValueError("clique sizes below 2 never admit a good coloring")
    red = find_mono_clique(coloring, Color.RED, s)
    if red is not None:
        return Verdict(False, (Color.RED, red))
    blue = find_mono_clique(coloring, Color.BLUE, t)
    if blue is not None:
        return Verdict(False, (Color.BLUE, blue))
    return Verdict(True)


def brute_force_good_coloring(
    graph: DeletedEdgeGraph, s: int, t: int
) -> Optional[EdgeColoring]:
    """Exhaustively scan all 2^m colorings; return the first good one.

    Bit i of the enumeration word is the color of the i-th present edge in
    lexicographic order (1 = red, 0 = blue), and words are tried in
    increasing order, so the result is deterministic.  This shares nothing
    with the CNF encoding or the solver and is the ground-truth oracle for
    both.
    """
    if s < 2 or t < 2:
        raise ValueError("clique sizes below 2 never admit a good coloring")
    present = graph.present_edges()
    m = len(present)
    if m > ENUMERATION_LIMIT:
        raise BudgetExceededError(
            f"{m} edges exceed the 2^{ENUMERATION_LIMIT} enumeration budget"
        )
    position = {e: i for i, e in enumerate(present)}

    def clique_masks(k: int) -> list[int]:
        masks = []
        for subset in k_subsets(graph.p, k):
            if subset_is_clique(graph, subset):
                mask = 0
                for pair in combinations(subset, 2):
                    mask |= 1 << position[pair]
                masks.append(mask)
        return masks

    red_masks = clique_masks(s)
    blue_masks = clique_masks(t)
    for word in range(1 << m):
        if any(word & mask == mask for mask in red_masks):
            continue
        if any(word & mask == 0 for mask in blue_masks):
            continue
        return EdgeColoring(
            graph,
            {
                e: Color.RED if word >> i & 1 else Color.BLUE
                for i, e in enumerate(present)
            },
        )
    return None
