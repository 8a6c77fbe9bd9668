"""Matching Kneser graphs and the classical Kneser graphs they generalize.

The matching Kneser graph of a host graph G at size r has one vertex per
r-matching of G, two vertices being adjacent when the matchings share no
edge. For a disjoint union of l independent edges this is exactly the
classical Kneser graph K(l, r) on r-subsets of an l-set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import KneserSizeError, ParameterError
from .graphs import LabeledGraph, Matching, iter_matchings, make_graph, write_edgelist

DEFAULT_MATCHING_CAP = 200_000


@dataclass(frozen=True)
class MatchingKneserGraph:
    """The matching Kneser graph of ``host`` at matching size ``r``.

    ``matchings[i]`` describes vertex ``i`` of ``graph``; the vertex order is
    the canonical (lexicographic) enumeration order, so vertex ids are stable
    across runs and usable in certificates.
    """

    host: LabeledGraph
    r: int
    matchings: tuple[Matching, ...]
    graph: LabeledGraph


def build_matching_kneser(G: LabeledGraph, r: int, cap: int = DEFAULT_MATCHING_CAP) -> MatchingKneserGraph:
    """Construct the matching Kneser graph of G at size r.

    Refuses with :class:`KneserSizeError` when the number of r-matchings
    exceeds ``cap``; enumeration is aborted as soon as the cap is crossed.
    """

    if r < 1:
        raise ParameterError("matching size r must be at least 1")
    matchings: list[Matching] = []
    for matching in iter_matchings(G, r):
        matchings.append(matching)
        if len(matchings) > cap:
            raise KneserSizeError(
                f"matching Kneser graph of ({G.n} vertices, r={r}) has more than "
                f"{cap} vertices (enumeration stopped at {len(matchings)})"
            )
    edge_sets = [frozenset(mt) for mt in matchings]
    n = len(matchings)
    pairs = []
    for i in range(n):
        left = edge_sets[i]
        for j in range(i + 1, n):
            if left.isdisjoint(edge_sets[j]):
                pairs.append((i, j))
    return MatchingKneserGraph(
        host=G,
        r=r,
        matchings=tuple(matchings),
        graph=make_graph(n, pairs),
    )


def r_subsets(l: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of {1..l} in lexicographic order."""

    return list(combinations(range(1, l + 1), r))


def kneser_graph(l: int, r: int) -> LabeledGraph:
    """The Kneser graph K(l, r): r-subsets of an l-set, adjacent when disjoint.

    Vertex i is the i-th r-subset in lexicographic order, which makes the
    result identical (vertex-for-vertex) to the matching Kneser graph of l
    independent edges under the canonical matching enumeration order.
    """

    if r < 1:
        raise ParameterError("subset size r must be at least 1")
    if l < r:
        raise ParameterError(f"need l >= r, got l={l}, r={r}")
    subsets = r_subsets(l, r)
    sets = [frozenset(s) for s in subsets]
    n = len(subsets)
    pairs = []
    for i in range(n):
        left = sets[i]
        for j in range(i + 1, n):
            if left.isdisjoint(sets[j]):
                pairs.append((i, j))
    return make_graph(n, pairs)


def matchings_sidecar_lines(mkg: MatchingKneserGraph) -> list[str]:
    """One line per vertex: ``i: (u,v) (u,v) ...`` describing its matching."""

    return [
        f"{i}: " + " ".join(f"({u},{v})" for u, v in matching)
        for i, matching in enumerate(mkg.matchings)
    ]


def write_kneser_files(mkg: MatchingKneserGraph, base: str | Path) -> tuple[Path, Path]:
    """Write ``<base>.edges`` (edge-list format) and ``<base>.matchings`` (sidecar)."""

    base = Path(base)
    graph_path = base.with_name(base.name + ".edges")
    sidecar_path = base.with_name(base.name + ".matchings")
    write_edgelist(mkg.graph, graph_path)
    sidecar_path.write_text("\n".join(matchings_sidecar_lines(mkg)) + "\n")
    return graph_path, sidecar_path
