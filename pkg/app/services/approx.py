from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from app.models.graph import Graph, VertexSet
from app.services.graph_ops import delete_vertices, induced_subgraph
from app.services.partition import cover3_via_partition
from app.services.paths import find_path_of_order
from app.services.tree import pvcp_tree
from app.utils.errors import PreconditionError
from app.utils.rng import seeded_permutation

logger = logging.getLogger("approx")


@dataclass
class Sparse3Trace:
    cover: VertexSet
    first_phase: int = 0  # vertices of degree >= 4 removed
    second_phase: int = 0  # vertices chosen by the subcubic solver


@dataclass
class CaroWeiTrace:
    seed: int
    order: list[int] = field(default_factory=list)
    forest: list[int] = field(default_factory=list)  # the 1-degenerate set S
    cover: VertexSet = field(default_factory=VertexSet)


def greedy_k_approx(g: Graph, k: int) -> VertexSet:
    """Take every vertex of a found k-path until none remains; a k-approximation."""
    if k < 2:
        raise PreconditionError(f"greedy approximation needs k >= 2, got {k}")
    taken: list[int] = []
    batches = 0
    while (witness := find_path_of_order(g, k, excluded=taken)) is not None:
        taken.extend(witness.vertices)
        batches += 1
        logger.debug(f"Batch {batches}: took path {list(witness.vertices)}")
    logger.info(f"Greedy k={k}: {batches} disjoint paths, {len(taken)} vertices")
    return VertexSet.of(taken)


def _degree_two_strategy(g: Graph) -> list[int]:
    """Delete the lowest-index vertex of current degree >= 2 until none is left."""
    degree = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    chosen: list[int] = []
    while True:
        v = next((u for u in range(g.n) if not removed[u] and degree[u] >= 2), None)
        if v is None:
            return chosen
        removed[v] = True
        chosen.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                degree[u] -= 1


def subcubic_cover3(g: Graph) -> VertexSet:
    """3-path cover of size at most min(n/2, m/2) for maximum degree <= 3."""
    if g.max_degree > 3:
        raise PreconditionError(
            f"subcubic solver needs maximum degree <= 3, got {g.max_degree}"
        )
    by_edges = VertexSet.of(_degree_two_strategy(g))
    by_partition = cover3_via_partition(g)
    best = by_edges if len(by_edges) <= len(by_partition) else by_partition
    logger.debug(
        f"Subcubic: degree-2 strategy {len(by_edges)}, partition {len(by_partition)}"
    )
    return best


def sparse3_trace(g: Graph) -> Sparse3Trace:
    """Strip vertices of degree >= 4 (lowest index first), then solve the rest as subcubic."""
    degree = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    stripped: list[int] = []
    while True:
        v = next((u for u in range(g.n) if not removed[u] and degree[u] >= 4), None)
        if v is None:
            break
        removed[v] = True
        stripped.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                degree[u] -= 1

    rest, original = delete_vertices(g, VertexSet.of(stripped))
    second = [original[v] for v in subcubic_cover3(rest).members]
    trace = Sparse3Trace(
        cover=VertexSet.of([*stripped, *second]),
        first_phase=len(stripped),
        second_phase=len(second),
    )
    logger.info(
        f"SPARSE3: s={trace.first_phase}, d={trace.second_phase}, "
        f"size {len(trace.cover)} <= {(2 * g.n + g.m) / 6:.3f}"
    )
    return trace


def sparse3(g: Graph) -> VertexSet:
    return sparse3_trace(g).cover


def degenerate_set(g: Graph, order: Iterable[int]) -> list[int]:
    """Add each vertex in turn unless two of its neighbours are already in."""
    inside = [False] * g.n
    members: list[int] = []
    for v in order:
        if sum(1 for u in g.adj[v] if inside[u]) < 2:
            inside[v] = True
            members.append(v)
    return members


def caro_wei_trace(g: Graph, k: int, seed: int) -> CaroWeiTrace:
    """Cover V minus S plus an optimal cover of the forest induced by S.

    S is built from a seeded random vertex order; each member has at most
    one earlier neighbour in S, so S induces a forest.
    """
    if k < 2:
        raise PreconditionError(f"Caro-Wei construction needs k >= 2, got {k}")
    order = seeded_permutation(g.n, seed)
    forest = degenerate_set(g, order)
    forest_graph, original = induced_subgraph(g, forest)
    forest_cover = [original[v] for v in pvcp_tree(forest_graph, k).members]
    in_forest = set(forest)
    outside = [v for v in range(g.n) if v not in in_forest]
    trace = CaroWeiTrace(
        seed=seed,
        order=order,
        forest=sorted(forest),
        cover=VertexSet.of([*outside, *forest_cover]),
    )
    logger.debug(f"Caro-Wei seed {seed}: |S|={len(forest)}, cover {len(trace.cover)}")
    return trace


def caro_wei_cover(g: Graph, k: int, seed: int) -> VertexSet:
    return caro_wei_trace(g, k, seed).cover


def caro_wei_best(g: Graph, k: int, seeds: Iterable[int]) -> CaroWeiTrace:
    """Smallest cover over the seeds; ties go to the lowest seed."""
    best: CaroWeiTrace | None = None
    for seed in sorted(set(seeds)):
        trace = caro_wei_trace(g, k, seed)
        if best is None or len(trace.cover) < len(best.cover):
            best = trace
    if best is None:
        raise PreconditionError("seed sweep is empty")
    logger.info(f"Caro-Wei sweep: best seed {best.seed}, size {len(best.cover)}")
    return best
