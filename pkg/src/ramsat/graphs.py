"""Complete graphs with deleted edges.

Vertices of K_p are 0..p-1.  An edge is a pair (u, v) with u < v, and the
C(p,2) edges are ranked lexicographically: (0,1), (0,2), ..., (0,p-1),
(1,2), ..., (p-2,p-1).  Everything downstream (CNF variables, enumeration
bit positions, output ordering) leans on this one ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical form of the edge between two distinct vertices."""
    if u == v:
        raise ValueError(f"loop ({u},{u}) is not an edge")
    if u < 0 or v < 0:
        raise ValueError(f"negative vertex in edge ({u},{v})")
    return (u, v) if u < v else (v, u)


def edge_count(p: int) -> int:
    """Number of edges of K_p."""
    if p < 0:
        raise ValueError("vertex count must be non-negative")
    return math.comb(p, 2)


def edge_index(e: Edge, p: int) -> int:
    """Lexicographic rank of edge e among the edges of K_p."""
    u, v = e
    if not 0 <= u < v < p:
        raise ValueError(f"({u},{v}) is not a canonical edge of K_{p}")
    # u complete blocks of sizes p-1, p-2, ..., then the offset within block u
    return u * p - u * (u + 1) // 2 + (v - u - 1)


def index_to_edge(i: int, p: int) -> Edge:
    """Inverse of edge_index."""
    if not 0 <= i < edge_count(p):
        raise ValueError(f"edge index {i} out of range for K_{p}")
    u = 0
    block = p - 1
    while i >= block:
        i -= block
        block -= 1
        u += 1
    return (u, u + 1 + i)


def k_subsets(p: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {0..p-1} as sorted tuples, in lexicographic order."""
    if k < 0:
        raise ValueError("subset size must be non-negative")
    return combinations(range(p), k)


@dataclass(frozen=True)
class DeletedEdgeGraph:
    """K_p minus a (possibly empty) set of deleted edges.

    The deleted edges are normalised to canonical sorted tuples, so two
    graphs compare equal iff they have the same vertices and the same
    deleted edge set.
    """

    p: int
    deleted: tuple[Edge, ...] = ()
    _deleted_set: frozenset[Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError("vertex count must be non-negative")
        canonical = tuple(sorted(edge(u, v) for u, v in self.deleted))
        for u, v in canonical:
            if v >= self.p:
                raise ValueError(f"deleted edge ({u},{v}) has an endpoint outside K_{self.p}")
        if len(frozenset(canonical)) != len(canonical):
            raise ValueError("duplicate deleted edge")
        object.__setattr__(self, "deleted", canonical)
        object.__setattr__(self, "_deleted_set", frozenset(canonical))

    @classmethod
    def complete(cls, p: int) -> "DeletedEdgeGraph":
        return cls(p)

    def is_present(self, e: Edge) -> bool:
        u, v = e
        if not 0 <= u < v < self.p:
            raise ValueError(f"({u},{v}) is not a canonical edge of K_{self.p}")
        return e not in self._deleted_set

    def present_edges(self) -> list[Edge]:
        """The surviving edges, in lexicographic order."""
        gone = self._deleted_set
        return [
            (u, v)
            for u in range(self.p)
            for v in range(u + 1, self.p)
            if (u, v) not in gone
        ]

    def num_present_edges(self) -> int:
        return edge_count(self.p) - len(self.deleted)


def subset_is_clique(graph: DeletedEdgeGraph, vertices: Iterable[int]) -> bool:
    """True iff no deleted edge of the graph joins two of the given vertices.

    Callers are expected to pass vertices of the graph; this is the inner
    loop of both the verifier and the encoder, so membership is not
    re-checked here.
    """
    if not graph.deleted:
        return True
    inside = set(vertices)
    return not any(u in inside and v in inside for u, v in graph.deleted)
