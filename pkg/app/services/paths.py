from __future__ import annotations

import logging
from collections.abc import Collection, Iterable

from app.models.graph import Graph, PathWitness, VertexSet
from app.utils.errors import PreconditionError, VerificationError

logger = logging.getLogger("paths")


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionError(f"path order k must be at least 1, got {k}")


def find_path_of_order(
    g: Graph, k: int, excluded: Collection[int] = ()
) -> PathWitness | None:
    """First simple path on k vertices avoiding ``excluded``, or None.

    Depth-bounded DFS on an explicit stack: start vertices ascending, neighbours ascending. Cost is
    O(n * D^(k-1)) for maximum degree D.
    """
    _check_k(k)
    blocked = set(excluded)
    if k > g.n - len(blocked):
        return None

    nbrs = [sorted(u for u in g.adj[v] if u not in blocked) for v in range(g.n)]
    on_path = [False] * g.n

    for start in range(g.n):
        if start in blocked:
            continue
        # path[i] is on the stack with nbrs[path[i]][cursor[i]] as its next candidate.
        path = [start]
        cursor = [0]
        on_path[start] = True
        while path:
            if len(path) == k:
                return PathWitness(vertices=tuple(path))
            v = path[-1]
            i = cursor[-1]
            if i < len(nbrs[v]):
                cursor[-1] = i + 1
                u = nbrs[v][i]
                if not on_path[u]:
                    on_path[u] = True
                    path.append(u)
                    cursor.append(0)
            else:
                on_path[v] = False
                path.pop()
                cursor.pop()
    return None


def uncovered_path(g: Graph, s: VertexSet, k: int) -> PathWitness | None:
    """A path on k vertices that misses s, or None when s is a k-path cover."""
    s.check_for(g)
    witness = find_path_of_order(g, k, excluded=s.members)
    if witness is not None and not witness.is_path_in(g):
        raise VerificationError(f"search returned a non-path {list(witness.vertices)}")
    return witness


def is_k_path_cover(g: Graph, s: VertexSet, k: int) -> bool:
    return uncovered_path(g, s, k) is None


def enumerate_path_vertex_sets(
    g: Graph, k: int, vertices: Iterable[int] | None = None
) -> set[int]:
    """Vertex sets (as bitmasks) of every simple path on k vertices.

    With ``vertices`` given, only paths inside that vertex subset are listed.
    """
    _check_k(k)
    allowed = set(range(g.n)) if vertices is None else set(vertices)
    nbrs = {v: sorted(u for u in g.adj[v] if u in allowed) for v in allowed}
    masks: set[int] = set()

    for start in sorted(allowed):
        path = [start]
        cursor = [0]
        mask = 1 << start
        while path:
            v = path[-1]
            i = cursor[-1]
            if len(path) < k and i < len(nbrs[v]):
                cursor[-1] = i + 1
                u = nbrs[v][i]
                if not mask >> u & 1:
                    mask |= 1 << u
                    path.append(u)
                    cursor.append(0)
                continue
            if len(path) == k:
                masks.add(mask)
            mask &= ~(1 << v)
            path.pop()
            cursor.pop()
    logger.debug(f"Enumerated {len(masks)} vertex sets of {k}-paths")
    return masks
