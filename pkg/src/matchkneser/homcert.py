"""Homomorphism certificates pinning down the chromatic number of family instances.

For a prescribed-gap graph G with parameters (r, theta, gamma), two explicit
vertex maps sandwich chi of the matching Kneser graph of G between two copies
of chi(K(l, r - t)) = theta:

* forward: every r-matching of G keeps its r - t smallest matched-pair
  indices, landing in K(l, r - t); edge-disjoint matchings map to disjoint
  subsets, so a proper coloring of K(l, r - t) pulls back to G's side.
* backward: every (r - t)-subset S extends to an r-matching by adding one
  hub edge per hub, drawn from a block of padding vertices private to S
  (indexed by the colexicographic rank of S), so disjoint subsets map to
  edge-disjoint matchings.

Both maps are verified exhaustively, never trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Any, Sequence

from .coloring import ChiCertificate, chromatic_number, lovasz_chi
from .errors import Deadline, KneserSizeError, ParameterError, VerificationError, ensure_deadline
from .families import FamilyParams, gap_graph
from .graphs import Edge, LabeledGraph, Matching, iter_matchings
from .kneser import DEFAULT_MATCHING_CAP, kneser_graph, r_subsets

# Above this many vertex pairs the pair checks switch from exhaustive
# iteration to seeded random sampling.
EXHAUSTIVE_PAIR_LIMIT = 2_000_000
SAMPLE_PAIRS = 100_000


@dataclass(frozen=True)
class HomWitness:
    """An explicit vertex map between two graphs, checkable edge by edge.

    ``source_desc[i]`` and ``target_desc[j]`` describe what each vertex index
    stands for (an edge-matching or a subset of 1-based labels).
    """

    source_desc: tuple[Any, ...]
    target_desc: tuple[Any, ...]
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class HomomorphismEvidence:
    """Chi lower-bound witness: a verified homomorphism from a graph of known chi."""

    witness: HomWitness
    source_chi: ChiCertificate
    kind: str = "HOMOMORPHISM"

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "source_chi": self.source_chi.to_json_dict(),
            "mapping": list(self.witness.mapping),
        }


@dataclass(frozen=True)
class FamilyCertification:
    """Everything certify_family established about one parameter choice."""

    params: FamilyParams
    n_matchings: int
    chi_certificate: ChiCertificate
    forward: HomWitness
    backward: HomWitness
    kneser_certificate: ChiCertificate
    pairs_checked: int
    exhaustive: bool


def colex_rank(subset: Sequence[int]) -> int:
    """1-based colexicographic rank of a sorted subset of {1, 2, ...}."""

    rank = 1
    for j, s in enumerate(sorted(subset), start=1):
        rank += comb(s - 1, j)
    return rank


def forward_map(matching: Matching, params: FamilyParams) -> tuple[int, ...]:
    """The r - t smallest pair indices i whose edge x_i y_i lies in ``matching``.

    Every r-matching of the family graph carries at least r - t such edges
    (all other edges meet one of the t hubs); fewer indicates a construction
    bug and raises :class:`VerificationError`.
    """

    p = params
    indices = [i for i in range(1, p.l + 1) if p.x_edge(i) in matching]
    need = p.r - p.t
    if len(indices) < need:
        raise VerificationError(
            f"matching has {len(indices)} matched-pair edges, expected at least {need}"
        )
    return tuple(indices[:need])


def backward_map(subset: Sequence[int], params: FamilyParams) -> Matching:
    """The r-matching assigned to an (r - t)-subset of pair indices.

    The subset's own x_i y_i edges are joined by t hub edges w_k z_j taken
    from the w-block reserved for this subset via its colexicographic rank,
    which makes the images of distinct subsets edge-disjoint on the hub side.
    """

    p = params
    chosen = tuple(sorted(subset))
    if len(chosen) != p.r - p.t:
        raise ParameterError(f"subset must have size r - t = {p.r - p.t}, got {len(chosen)}")
    if len(set(chosen)) != len(chosen) or chosen[0] < 1 or chosen[-1] > p.l:
        raise ParameterError(f"subset must consist of distinct indices in 1..{p.l}")
    rank = colex_rank(chosen)
    edges: list[Edge] = [p.x_edge(i) for i in chosen]
    for j in range(1, p.t + 1):
        edges.append((p.w_vertex((rank - 1) * p.t + j), p.z_vertex(j)))
    return tuple(sorted(edges))


def find_violation(witness: HomWitness, source: LabeledGraph, target: LabeledGraph) -> Edge | None:
    """The first source edge whose endpoints do not map to a target edge, or None."""

    if len(witness.mapping) != source.n:
        raise ParameterError(
            f"mapping covers {len(witness.mapping)} of {source.n} source vertices"
        )
    for u, v in source.edges:
        a, b = witness.mapping[u], witness.mapping[v]
        if a == b or not target.has_edge(a, b):
            return (u, v)
    return None


def verify_homomorphism(witness: HomWitness, source: LabeledGraph, target: LabeledGraph) -> bool:
    """True iff every source edge maps to a target edge (exhaustive check)."""

    return find_violation(witness, source, target) is None


def hom_witness_lines(witness: HomWitness) -> list[str]:
    """Serialization: one line per source vertex, ``i -> j # src_desc | tgt_desc``."""

    def describe(obj: Any) -> str:
        if obj and isinstance(obj[0], tuple):  # a matching
            return " ".join(f"({u},{v})" for u, v in obj)
        return "{" + ",".join(str(x) for x in obj) + "}"

    return [
        f"{i} -> {j} # {describe(witness.source_desc[i])} | {describe(witness.target_desc[j])}"
        for i, j in enumerate(witness.mapping)
    ]


def certify_family(
    params: FamilyParams,
    time_budget: float | None = None,
    deadline: Deadline | None = None,
    cap: int = DEFAULT_MATCHING_CAP,
    pair_limit: int = EXHAUSTIVE_PAIR_LIMIT,
    sample_pairs: int = SAMPLE_PAIRS,
    seed: int = 0,
) -> FamilyCertification:
    """Certify chi = theta for the matching Kneser graph of ``gap_graph(params)``.

    Steps: (a) solve the small Kneser graph K(l, r - t) exactly and cross-check
    the closed form; (b) verify the forward map on every (or, past
    ``pair_limit``, a seeded sample of) adjacent matching pair(s) together
    with the propriety of the pulled-back coloring; (c) verify the backward
    map exhaustively, giving the matching lower bound. Any verification
    failure raises :class:`VerificationError` -- it would mean a bug, not an
    ambiguous input.
    """

    p = params
    deadline = ensure_deadline(deadline, time_budget)
    G = gap_graph(p)

    matchings: list[Matching] = []
    for matching in iter_matchings(G, p.r):
        matchings.append(matching)
        if len(matchings) > cap:
            raise KneserSizeError(
                f"family instance has more than {cap} r-matchings "
                f"(enumeration stopped at {len(matchings)})"
            )

    small = kneser_graph(p.l, p.r - p.t)
    small_cert = chromatic_number(small, deadline=deadline)
    if small_cert.k != lovasz_chi(p.l, p.r - p.t):
        raise VerificationError(
            f"solver found chi(K({p.l},{p.r - p.t})) = {small_cert.k}, "
            f"closed form gives {lovasz_chi(p.l, p.r - p.t)}"
        )
    if small_cert.k != p.theta:
        raise VerificationError(
            f"target Kneser graph has chi = {small_cert.k}, expected theta = {p.theta}"
        )

    subsets = r_subsets(p.l, p.r - p.t)
    subset_index = {s: i for i, s in enumerate(subsets)}
    forward_idx = tuple(subset_index[forward_map(mt, p)] for mt in matchings)
    pulled_coloring = tuple(small_cert.coloring[f] for f in forward_idx)

    # Forward homomorphism + pulled-back coloring propriety over adjacent pairs.
    n = len(matchings)
    edge_sets = [frozenset(mt) for mt in matchings]
    subset_sets = [frozenset(s) for s in subsets]

    def check_pair(i: int, j: int) -> None:
        if edge_sets[i].isdisjoint(edge_sets[j]):
            if not subset_sets[forward_idx[i]].isdisjoint(subset_sets[forward_idx[j]]):
                raise VerificationError(
                    f"forward map is not a homomorphism at matching pair ({i}, {j})"
                )
            if pulled_coloring[i] == pulled_coloring[j]:
                raise VerificationError(
                    f"pulled-back coloring is improper at matching pair ({i}, {j})"
                )

    total_pairs = n * (n - 1) // 2
    exhaustive = total_pairs <= pair_limit
    if exhaustive:
        for i in range(n):
            deadline.check("homomorphism verification")
            for j in range(i + 1, n):
                check_pair(i, j)
        pairs_checked = total_pairs
    else:
        rng = random.Random(seed)
        pairs_checked = min(sample_pairs, total_pairs)
        for _ in range(pairs_checked):
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            check_pair(min(i, j), max(i, j))

    # Backward homomorphism: injective, round-trips through forward, and
    # disjoint subsets get edge-disjoint matchings. Exhaustive (the subset
    # side is small by construction).
    matching_index = {mt: i for i, mt in enumerate(matchings)}
    backward_images = []
    for s in subsets:
        image = backward_map(s, p)
        if image not in matching_index:
            raise VerificationError(f"backward image of {s} is not an r-matching of the host")
        backward_images.append(matching_index[image])
    if len(set(backward_images)) != len(subsets):
        raise VerificationError("backward map is not injective on subsets")
    for a in range(len(subsets)):
        if forward_map(matchings[backward_images[a]], p) != subsets[a]:
            raise VerificationError(f"forward(backward({subsets[a]})) round trip failed")
        for b in range(a + 1, len(subsets)):
            if subset_sets[a].isdisjoint(subset_sets[b]):
                if not edge_sets[backward_images[a]].isdisjoint(edge_sets[backward_images[b]]):
                    raise VerificationError(
                        f"backward map is not a homomorphism at subsets ({a}, {b})"
                    )

    backward_witness = HomWitness(
        source_desc=tuple(subsets),
        target_desc=tuple(matchings),
        mapping=tuple(backward_images),
    )
    forward_witness = HomWitness(
        source_desc=tuple(matchings),
        target_desc=tuple(subsets),
        mapping=forward_idx,
    )
    chi_cert = ChiCertificate(
        k=p.theta,
        coloring=pulled_coloring,
        witness=HomomorphismEvidence(witness=backward_witness, source_chi=small_cert),
    )
    return FamilyCertification(
        params=p,
        n_matchings=n,
        chi_certificate=chi_cert,
        forward=forward_witness,
        backward=backward_witness,
        kneser_certificate=small_cert,
        pairs_checked=pairs_checked,
        exhaustive=exhaustive,
    )


def certified_chi(params: FamilyParams, **kwargs: Any) -> ChiCertificate:
    """The certified chromatic number theta for a family instance (see certify_family)."""

    return certify_family(params, **kwargs).chi_certificate
