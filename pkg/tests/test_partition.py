from __future__ import annotations

import pytest

from app.models.graph import Graph
from app.services.bounds import bound_cubic_half
from app.services.generators import complete_graph, cycle_graph, h6_graph, star_graph
from app.services.oracle import psi_exact
from app.services.partition import cover3_via_partition, partition_bounded_degree
from app.services.paths import is_k_path_cover
from app.utils.errors import PreconditionError


def same_class_neighbours(g: Graph, classes: tuple[int, ...], v: int) -> int:
    return sum(1 for u in g.adj[v] if classes[u] == classes[v])


class TestPartitionBoundedDegree:
    def test_k5_into_two_classes(self):
        g = complete_graph(5)
        result = partition_bounded_degree(g, 2)
        assert result.t == 2
        assert result.max_intra <= 2
        assert sorted(result.class_sizes()) == [2, 3]

    def test_one_class_is_trivial(self):
        g = h6_graph()
        result = partition_bounded_degree(g, 1)
        assert result.t == 4
        assert result.moves == 0
        assert result.classes == (0,) * 6

    def test_star_needs_no_moves(self):
        result = partition_bounded_degree(star_graph(4), 2)
        assert result.t == 2
        assert result.max_intra <= 2

    def test_edgeless_graph(self):
        result = partition_bounded_degree(Graph.empty(3), 2)
        assert result.t == 0
        assert result.intra == (0, 0, 0)

    def test_stored_intra_matches_classes(self, random_graphs):
        for g in random_graphs(30, 15, seed=11):
            result = partition_bounded_degree(g, 3)
            assert result.intra == tuple(
                same_class_neighbours(g, result.classes, v) for v in range(g.n)
            )

    @pytest.mark.slow
    def test_contract_on_random_graphs(self, random_graphs):
        for g in random_graphs(200, 25, seed=12):
            for p in (2, 3, 4):
                result = partition_bounded_degree(g, p)
                bound = g.max_degree // p
                assert all(
                    same_class_neighbours(g, result.classes, v) <= bound for v in range(g.n)
                )
                assert result.moves <= g.m

    def test_zero_classes_rejected(self):
        with pytest.raises(PreconditionError):
            partition_bounded_degree(cycle_graph(4), 0)

    def test_members(self):
        result = partition_bounded_degree(cycle_graph(4), 2)
        assert sorted(result.members(0) + result.members(1)) == [0, 1, 2, 3]


class TestCover3ViaPartition:
    def test_c4(self):
        assert cover3_via_partition(cycle_graph(4)).members == (1, 3)

    def test_edgeless_graph_needs_nothing(self):
        assert cover3_via_partition(Graph.empty(4)).members == ()

    def test_valid_and_within_bound(self, random_graphs):
        for g in random_graphs(60, 14, seed=13):
            cover = cover3_via_partition(g)
            assert is_k_path_cover(g, cover, 3)
            if g.m:
                p = (g.max_degree + 2) // 2
                # the kept class holds at least n/p vertices
                assert len(cover) * p <= g.n * (p - 1)

    def test_at_least_optimum(self, random_graphs):
        for g in random_graphs(20, 9, seed=14):
            assert len(cover3_via_partition(g)) >= psi_exact(g, 3).psi

    @pytest.mark.slow
    def test_half_degree_bound_sweep(self, random_graphs):
        for g in random_graphs(500, 50, seed=15):
            cover = cover3_via_partition(g)
            assert is_k_path_cover(g, cover, 3)
            assert len(cover) <= bound_cubic_half(g)
