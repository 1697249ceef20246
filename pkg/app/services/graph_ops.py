from __future__ import annotations

from collections.abc import Iterable

import networkx as nx

from app.models.graph import Graph, VertexSet


def delete_vertices(g: Graph, s: VertexSet) -> tuple[Graph, list[int]]:
    """Induced subgraph on V minus s, re-indexed by ascending original index.

    Returns the new graph and ``original``, where ``original[new] = old``.
    """
    s.check_for(g)
    removed = set(s.members)
    original = [v for v in range(g.n) if v not in removed]
    if not removed:
        return g, original
    new_index = {old: new for new, old in enumerate(original)}
    rows = tuple(
        frozenset(new_index[u] for u in g.adj[old] if u not in removed)
        for old in original
    )
    return Graph(n=len(original), adj=rows), original


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    kept = set(keep)
    return delete_vertices(g, VertexSet.of(v for v in range(g.n) if v not in kept))


def disjoint_union(*graphs: Graph) -> Graph:
    """Place graphs side by side; the i-th graph's vertices follow the (i-1)-th's."""
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by lowest member."""
    return sorted(sorted(c) for c in nx.connected_components(g.to_networkx()))
