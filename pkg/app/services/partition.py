from __future__ import annotations

import logging

from app.models.graph import Graph, VertexSet
from app.models.result import Partition
from app.utils.errors import PreconditionError

logger = logging.getLogger("partition")


def partition_bounded_degree(g: Graph, p: int) -> Partition:
    """Split V into p classes, each inducing maximum degree at most floor(D/p).

    Local search from class(v) = v mod p: the lowest-index vertex with too
    many same-class neighbours moves to the class holding the fewest of its
    neighbours (lowest class on ties). Each move lowers the number of
    intra-class edges, so there are at most m moves.
    """
    if p < 1:
        raise PreconditionError(f"class count must be at least 1, got {p}")
    t = g.max_degree // p
    classes = [v % p for v in range(g.n)]

    intra = [sum(1 for u in g.adj[v] if classes[u] == classes[v]) for v in range(g.n)]

    moves = 0
    while True:
        violator = next((v for v in range(g.n) if intra[v] > t), None)
        if violator is None:
            break
        source = classes[violator]
        counts = [0] * p
        for u in g.adj[violator]:
            counts[classes[u]] += 1
        target = min(range(p), key=lambda c: (counts[c], c))
        logger.debug(
            f"Move {violator}: class {source} -> {target} "
            f"({counts[source]} -> {counts[target]} neighbours)"
        )
        classes[violator] = target
        intra[violator] = counts[target]
        for u in g.adj[violator]:
            if classes[u] == source:
                intra[u] -= 1
            elif classes[u] == target:
                intra[u] += 1
        moves += 1

    result = Partition(p=p, t=t, classes=tuple(classes), intra=tuple(intra), moves=moves)
    logger.info(f"Partition into {p} classes: {moves} moves, max intra {result.max_intra} <= {t}")
    return result


def cover3_via_partition(g: Graph) -> VertexSet:
    """All vertices outside the largest class of a ceil((D+1)/2)-partition.

    Every class induces maximum degree at most 1, so the largest one is a
    dissociation set and its complement is a 3-path vertex cover.
    """
    if g.m == 0:
        return VertexSet()
    p = (g.max_degree + 2) // 2
    partition = partition_bounded_degree(g, p)
    sizes = partition.class_sizes()
    largest = max(range(p), key=lambda c: (sizes[c], -c))
    kept = set(partition.members(largest))
    return VertexSet.of(v for v in range(g.n) if v not in kept)
