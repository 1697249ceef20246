from __future__ import annotations

from collections.abc import Iterable

import networkx as nx
from pydantic import BaseModel, model_validator


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..n-1, immutable once built."""

    n: int
    adj: tuple[frozenset[int], ...]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_invariants(self) -> Graph:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(
                f"adjacency has {len(self.adj)} rows for {self.n} vertices"
            )
        degree_sum = 0
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
            degree_sum += len(nbrs)
        if degree_sum % 2:
            raise ValueError("odd degree sum")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph; duplicate edges in either orientation collapse."""
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adj=tuple(frozenset(r) for r in rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n=n, adj=tuple(frozenset() for _ in range(n)))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> Graph:
        """Nodes must already be the integers 0..n-1."""
        n = nx_graph.number_of_nodes()
        return cls.from_edges(n, ((int(u), int(v)) for u, v in nx_graph.edges()))

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def neighbours(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def is_forest(self) -> bool:
        return nx.is_forest(self.to_networkx()) if self.n else True


class VertexSet(BaseModel):
    """Canonical vertex set: sorted, duplicate-free."""

    members: tuple[int, ...] = ()

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_canonical(self) -> VertexSet:
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("vertex set members must be strictly ascending")
        if self.members and self.members[0] < 0:
            raise ValueError("vertex indices must be non-negative")
        return self

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        return cls(members=tuple(sorted(set(vertices))))

    def check_for(self, g: Graph) -> None:
        if self.members and self.members[-1] >= g.n:
            raise ValueError(
                f"vertex {self.members[-1]} out of range for graph of order {g.n}"
            )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def union(self, other: Iterable[int]) -> VertexSet:
        return VertexSet.of((*self.members, *other))


class PathWitness(BaseModel):
    """A simple path, listed in traversal order."""

    vertices: tuple[int, ...]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_distinct(self) -> PathWitness:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")
        return self

    @property
    def order(self) -> int:
        return len(self.vertices)

    def is_path_in(self, g: Graph) -> bool:
        return all(b in g.adj[a] for a, b in zip(self.vertices, self.vertices[1:]))
