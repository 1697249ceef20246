from __future__ import annotations

import logging
from dataclasses import dataclass, field

from app.models.graph import Graph, VertexSet
from app.services.graph_ops import components
from app.utils.errors import PreconditionError

logger = logging.getLogger("tree")


@dataclass
class RootedView:
    """One tree component rooted at ``root``, listed children-before-parents."""

    root: int
    parent: dict[int, int | None] = field(default_factory=dict)
    order: list[int] = field(default_factory=list)
    down: dict[int, int] = field(default_factory=dict)


@dataclass
class Selection:
    vertex: int
    longest_child: int
    second_child: int


@dataclass
class TreeTrace:
    cover: VertexSet
    selections: list[Selection] = field(default_factory=list)


def rooted_view(g: Graph, root: int) -> RootedView:
    view = RootedView(root=root, parent={root: None})
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            view.order.append(v)
            continue
        stack.append((v, True))
        # Reversed push so children come off the stack in ascending order.
        for u in sorted(g.adj[v], reverse=True):
            if u != view.parent[v]:
                view.parent[u] = v
                stack.append((u, False))
    return view


def pvcp_tree_trace(g: Graph, k: int) -> TreeTrace:
    """Optimal k-path vertex cover of a forest, with the selection log.

    Post-order over each component. At vertex v with the two largest
    surviving child down-values m1 >= m2, the subtree at v is properly rooted
    exactly when 1 + m1 + m2 >= k; v is then selected and its subtree removed.
    """
    if k < 2:
        raise PreconditionError(f"tree solver needs k >= 2, got {k}")
    if not g.is_forest():
        raise PreconditionError("not a forest: input graph contains a cycle")

    trace = TreeTrace(cover=VertexSet())
    selected: list[int] = []
    for members in components(g):
        view = rooted_view(g, members[0])
        for v in view.order:
            m1 = m2 = 0
            for u in g.adj[v]:
                if u == view.parent[v]:
                    continue
                d = view.down[u]
                if d > m1:
                    m1, m2 = d, m1
                elif d > m2:
                    m2 = d
            if 1 + m1 + m2 >= k:
                selected.append(v)
                trace.selections.append(Selection(vertex=v, longest_child=m1, second_child=m2))
                view.down[v] = 0
                logger.debug(f"Selected {v} (child paths {m1}, {m2})")
            else:
                view.down[v] = 1 + m1

    trace.cover = VertexSet.of(selected)
    logger.info(f"Tree cover for k={k}: {len(selected)} of {g.n} vertices")
    return trace


def pvcp_tree(g: Graph, k: int) -> VertexSet:
    return pvcp_tree_trace(g, k).cover
