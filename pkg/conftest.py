from __future__ import annotations

import pytest

from app.models.graph import Graph
from app.services.generators import bounded_degree_graph, gnp_graph, random_tree
from app.utils.rng import make_rng


@pytest.fixture
def make_graph():
    """Factory fixture for building a Graph from an edge list."""

    def _make(n: int, edges: list[tuple[int, int]] | None = None) -> Graph:
        return Graph.from_edges(n, edges or [])

    return _make


@pytest.fixture
def random_graphs():
    """Factory fixture for seeded G(n, p) samples with n and p drawn per instance."""

    def _make(
        count: int,
        n_max: int,
        seed: int = 0,
        n_min: int = 1,
        p_min: float = 0.1,
        p_max: float = 0.9,
    ) -> list[Graph]:
        rng = make_rng(seed)
        graphs = []
        for i in range(count):
            n = int(rng.integers(n_min, n_max + 1))
            p = float(rng.uniform(p_min, p_max))
            graphs.append(gnp_graph(n, p, seed * 100003 + i))
        return graphs

    return _make


@pytest.fixture
def random_trees():
    """Factory fixture for seeded uniform labelled trees."""

    def _make(count: int, n_max: int, seed: int = 0, n_min: int = 1) -> list[Graph]:
        rng = make_rng(seed)
        return [
            random_tree(int(rng.integers(n_min, n_max + 1)), seed * 100003 + i)
            for i in range(count)
        ]

    return _make


@pytest.fixture
def random_subcubic_graphs():
    """Factory fixture for seeded random graphs of maximum degree at most 3."""

    def _make(count: int, n_max: int, seed: int = 0) -> list[Graph]:
        rng = make_rng(seed)
        return [
            bounded_degree_graph(int(rng.integers(1, n_max + 1)), 3, seed * 100003 + i)
            for i in range(count)
        ]

    return _make
