"""Exact generalized Turán numbers ex(G, rK2) via minimum edge-deletion sets.

Removing a minimum set of edges that leaves no r-matching is dual to keeping
a maximum (rK2)-free spanning subgraph, so both quantities come out of one
search. The search is a branch-and-bound on the hitting-set view: any valid
deletion set must meet every r-matching, so each node branches on the edges
of one concrete r-matching of the current graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .coloring import DEFAULT_TIME_BUDGET
from .errors import Deadline, ParameterError, SearchTimeout, ensure_deadline
from .graphs import Edge, LabeledGraph, first_matching, has_r_matching, remove_edges


@dataclass(frozen=True)
class DeletionCertificate:
    """A set of deleted edges after which no r-matching survives.

    ``optimal`` asserts that the branch-and-bound exhausted every strictly
    smaller deletion set; when the search times out the best known set is
    returned with ``optimal=False`` and is only an upper bound.
    """

    r: int
    deleted: tuple[Edge, ...]
    size: int
    optimal: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "deleted": [[u, v] for u, v in self.deleted],
            "size": self.size,
            "optimal": self.optimal,
        }


def min_deletion_set(
    G: LabeledGraph,
    r: int,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
    deadline: Deadline | None = None,
) -> DeletionCertificate:
    """A minimum edge set whose removal leaves G without any r-matching.

    Deterministic: each node branches on the lexicographically first
    r-matching of the current graph, trying its edges in lexicographic
    order, and ties between equally small deletion sets resolve to the
    lexicographically least one. Depth never exceeds the optimum, so the
    search is cheap whenever the answer is.
    """

    if r < 1:
        raise ParameterError("matching size r must be at least 1")
    deadline = ensure_deadline(deadline, time_budget)
    if not has_r_matching(G, r):
        return DeletionCertificate(r=r, deleted=(), size=0, optimal=True)

    # Deleting everything is always valid, which seeds the bound.
    best_size = G.m
    best_set: tuple[Edge, ...] = G.edges
    timed_out = False
    expanded: set[frozenset[Edge]] = set()

    def search(current: LabeledGraph, removed: list[Edge]) -> None:
        nonlocal best_size, best_set, timed_out
        if timed_out:
            return
        key = frozenset(removed)
        if key in expanded:  # the same deletion set is reachable in any order
            return
        expanded.add(key)
        if deadline.expired():
            timed_out = True
            return
        if not has_r_matching(current, r):
            candidate = tuple(sorted(removed))
            if len(candidate) < best_size or (len(candidate) == best_size and candidate < best_set):
                best_size = len(candidate)
                best_set = candidate
            return
        # Allow ties (len == best_size) so the lexicographically least
        # optimum is always reachable; every optimal set meets the branching
        # matching, hence lies in some branch below.
        if len(removed) + 1 > best_size:
            return
        branching = first_matching(current, r)
        assert branching is not None
        for edge in branching:
            removed.append(edge)
            search(remove_edges(current, (edge,)), removed)
            removed.pop()

    search(G, [])
    if timed_out:
        return DeletionCertificate(r=r, deleted=best_set, size=best_size, optimal=False)
    return DeletionCertificate(r=r, deleted=best_set, size=best_size, optimal=True)


def generalized_turan(
    G: LabeledGraph,
    r: int,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
    deadline: Deadline | None = None,
) -> int:
    """ex(G, rK2): the maximum edge count of an (rK2)-free spanning subgraph of G.

    Computed as |E(G)| minus the minimum deletion size; raises
    :class:`SearchTimeout` rather than returning an unproven value.
    """

    cert = min_deletion_set(G, r, time_budget=time_budget, deadline=deadline)
    if not cert.optimal:
        raise SearchTimeout(f"minimum deletion search for r={r} timed out; best bound {cert.size}")
    return G.m - cert.size
