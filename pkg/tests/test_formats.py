from __future__ import annotations

import pytest

from app.models.graph import Graph, VertexSet
from app.services.generators import cycle_graph, gen_random_mop, h6_graph, random_tree
from app.utils.errors import GraphParseError
from app.utils.formats import (
    parse_edge_list,
    parse_embedding,
    parse_vertex_set,
    serialize_edge_list,
    serialize_embedding,
    serialize_vertex_set,
)


class TestParseEdgeList:
    def test_path_on_three_vertices(self):
        g = parse_edge_list("3 2\n0 1\n1 2")
        assert g.n == 3
        assert g.m == 2
        assert g.edges() == [(0, 1), (1, 2)]

    def test_four_cycle_degrees(self):
        g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")
        assert g.m == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_duplicate_edge_is_merged(self):
        g = parse_edge_list("2 1\n0 1\n0 1")
        assert g.m == 1

    def test_reversed_duplicate_is_merged(self):
        g = parse_edge_list("2 1\n1 0\n0 1")
        assert g.edges() == [(0, 1)]

    def test_comments_and_blank_lines_skipped(self):
        g = parse_edge_list("# generated\n3 1\n\n# edge follows\n0 2\n")
        assert g.edges() == [(0, 2)]

    def test_edgeless_graph(self):
        g = parse_edge_list("5 0")
        assert g.n == 5
        assert g.m == 0

    def test_missing_header(self):
        with pytest.raises(GraphParseError):
            parse_edge_list("# nothing here\n")

    def test_malformed_header_names_line(self):
        with pytest.raises(GraphParseError) as exc:
            parse_edge_list("# c\n3\n0 1")
        assert exc.value.line == 2

    def test_index_out_of_range_names_line(self):
        with pytest.raises(GraphParseError) as exc:
            parse_edge_list("2 1\n0 2")
        assert exc.value.line == 2
        assert "line 2" in str(exc.value)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphParseError) as exc:
            parse_edge_list("3 2\n0 1\n1 1")
        assert exc.value.line == 3
        assert "self-loop" in str(exc.value)

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphParseError):
            parse_edge_list("3 2\n0 1")

    def test_non_integer_token(self):
        with pytest.raises(GraphParseError):
            parse_edge_list("3 1\n0 x")

    def test_exit_code_is_parse_error(self):
        with pytest.raises(GraphParseError) as exc:
            parse_edge_list("oops")
        assert exc.value.exit_code == 3


class TestSerializeEdgeList:
    def test_four_cycle_canonical(self):
        assert serialize_edge_list(cycle_graph(4)) == "4 4\n0 1\n0 3\n1 2\n2 3"

    def test_single_vertex(self):
        assert serialize_edge_list(Graph.empty(1)) == "1 0"

    def test_single_edge(self):
        assert serialize_edge_list(Graph.from_edges(2, [(1, 0)])) == "2 1\n0 1"

    def test_parse_inverts_serialize(self):
        for g in (h6_graph(), random_tree(9, 3), Graph.empty(0)):
            assert parse_edge_list(serialize_edge_list(g)) == g


class TestVertexSetFormat:
    def test_parse_sorts_and_dedups(self):
        assert parse_vertex_set("# cover\n3 1\n1 0").members == (0, 1, 3)

    def test_parse_empty(self):
        assert parse_vertex_set("").members == ()

    def test_out_of_range(self):
        with pytest.raises(GraphParseError):
            parse_vertex_set("0 4", n=4)

    def test_negative_rejected(self):
        with pytest.raises(GraphParseError):
            parse_vertex_set("-1")

    def test_serialize(self):
        assert serialize_vertex_set(VertexSet.of([2, 0])) == "0 2"


class TestEmbeddingFormat:
    def test_parse(self):
        cycle, chords = parse_embedding("5\n0 1 2 3 4\n2 0\n0 3")
        assert cycle == [0, 1, 2, 3, 4]
        assert chords == {(0, 2), (0, 3)}

    def test_cycle_must_be_permutation(self):
        with pytest.raises(GraphParseError) as exc:
            parse_embedding("3\n0 1 1")
        assert exc.value.line == 2

    def test_missing_cycle(self):
        with pytest.raises(GraphParseError):
            parse_embedding("4")

    def test_serialize_then_parse(self):
        h = gen_random_mop(9, 4)
        cycle, chords = parse_embedding(serialize_embedding(h))
        assert tuple(cycle) == h.cycle
        assert chords == set(h.chords)
