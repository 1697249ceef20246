from __future__ import annotations

from itertools import permutations

import pytest

from app.models.graph import Graph, VertexSet
from app.services.generators import complete_graph, cycle_graph, path_graph, star_graph
from app.services.paths import (
    enumerate_path_vertex_sets,
    find_path_of_order,
    is_k_path_cover,
    uncovered_path,
)
from app.utils.errors import PreconditionError


class TestFindPathOfOrder:
    def test_first_path_in_p4(self):
        witness = find_path_of_order(path_graph(4), 3)
        assert witness.vertices == (0, 1, 2)

    def test_whole_path(self):
        witness = find_path_of_order(path_graph(4), 4)
        assert witness.vertices == (0, 1, 2, 3)

    def test_too_long(self):
        assert find_path_of_order(path_graph(4), 5) is None

    def test_star_has_no_four_path(self):
        assert find_path_of_order(star_graph(5), 4) is None
        assert find_path_of_order(star_graph(5), 3) is not None

    def test_single_vertex_path(self):
        assert find_path_of_order(Graph.empty(2), 1).vertices == (0,)
        assert find_path_of_order(Graph.empty(0), 1) is None

    def test_excluded_vertices_avoided(self):
        witness = find_path_of_order(cycle_graph(5), 3, excluded=[0])
        assert witness.vertices == (1, 2, 3)

    def test_witness_is_a_real_path(self, random_graphs):
        for g in random_graphs(30, 10, seed=2):
            for k in (2, 3, 4):
                witness = find_path_of_order(g, k)
                if witness is not None:
                    assert witness.order == k
                    assert witness.is_path_in(g)

    def test_k_zero_rejected(self):
        with pytest.raises(PreconditionError):
            find_path_of_order(path_graph(3), 0)

    def test_four_cycle_is_traversed_from_zero(self):
        assert find_path_of_order(cycle_graph(4), 4).vertices == (0, 1, 2, 3)

    def test_agrees_with_exhaustive_sequences(self, random_graphs):
        for g in random_graphs(25, 7, seed=9):
            for k in range(1, g.n + 2):
                exists = any(
                    all(b in g.adj[a] for a, b in zip(seq, seq[1:]))
                    for seq in permutations(range(g.n), k)
                )
                assert (find_path_of_order(g, k) is not None) == exists

    def test_hamiltonian_path_in_complete_graph(self):
        assert find_path_of_order(complete_graph(6), 6).vertices == (0, 1, 2, 3, 4, 5)


class TestCoverPredicate:
    def test_middle_vertex_covers_p3(self):
        assert is_k_path_cover(path_graph(3), VertexSet.of([1]), 3)

    def test_empty_set_on_p3(self):
        witness = uncovered_path(path_graph(3), VertexSet(), 3)
        assert witness is not None
        assert sorted(witness.vertices) == [0, 1, 2]

    def test_opposite_corners_cover_c4(self):
        assert is_k_path_cover(cycle_graph(4), VertexSet.of([0, 2]), 3)
        assert not is_k_path_cover(cycle_graph(4), VertexSet.of([0]), 3)

    def test_k_two_is_vertex_cover(self):
        g = star_graph(3)
        assert is_k_path_cover(g, VertexSet.of([0]), 2)
        assert not is_k_path_cover(g, VertexSet.of([1, 2, 3]), 2)

    def test_everything_is_a_cover(self, random_graphs):
        for g in random_graphs(10, 8, seed=8):
            assert is_k_path_cover(g, VertexSet.of(range(g.n)), 3)

    def test_supersets_stay_covers(self, random_graphs):
        for g in random_graphs(20, 9, seed=10):
            s = VertexSet.of(range(0, g.n, 2))
            if is_k_path_cover(g, s, 3):
                assert is_k_path_cover(g, s.union([g.n - 1]), 3)

    def test_k_one_needs_every_vertex(self):
        g = path_graph(3)
        assert is_k_path_cover(g, VertexSet.of([0, 1, 2]), 1)
        assert not is_k_path_cover(g, VertexSet.of([0, 1]), 1)

    def test_out_of_range_cover(self):
        with pytest.raises(ValueError):
            uncovered_path(path_graph(3), VertexSet.of([3]), 2)


class TestEnumeratePathVertexSets:
    def test_c4_three_paths(self):
        masks = enumerate_path_vertex_sets(cycle_graph(4), 3)
        # every 3-subset of C4 spans a path
        assert masks == {0b0111, 0b1011, 0b1101, 0b1110}

    def test_restricted_to_subset(self):
        masks = enumerate_path_vertex_sets(path_graph(5), 2, vertices=[0, 1, 3])
        assert masks == {0b0011}

    def test_no_paths(self):
        assert enumerate_path_vertex_sets(Graph.empty(4), 2) == set()


class TestLongPaths:
    def test_cover_check_with_large_k(self):
        assert is_k_path_cover(path_graph(3000), VertexSet.of([1500]), 1600)
        assert not is_k_path_cover(path_graph(3000), VertexSet.of([1500]), 1500)

    def test_full_path_found_without_recursion(self):
        witness = find_path_of_order(path_graph(1500), 1500)
        assert witness.vertices == tuple(range(1500))

    def test_enumeration_with_large_k(self):
        masks = enumerate_path_vertex_sets(path_graph(1200), 1199)
        assert masks == {(1 << 1199) - 1, ((1 << 1200) - 1) ^ 1}
