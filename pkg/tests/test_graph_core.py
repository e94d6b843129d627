"""Graph construction, label subsets, component counting and the text format."""

import numpy as np
import pytest

from conftest import bfs_components, random_instances, random_subset
from exceptions import (
    DisconnectedInputError,
    DuplicateEdgeError,
    LabelOutOfRangeError,
    NodeOutOfRangeError,
    ParseError,
    SelfLoopError,
    UnusedLabelError,
    WidthMismatchError,
)
from graph_core import (
    DisjointSet,
    LabelSubset,
    build_graph,
    component_count,
    format_instance_text,
    is_feasible,
    max_label_frequency,
    parse_instance_text,
)

TRIANGLE = [(1, 2, 1), (2, 3, 1), (1, 3, 2)]


class TestBuildGraph:

    def test_valid_triangle(self):
        g = build_graph(3, 2, TRIANGLE)
        assert (g.node_count, g.label_count, g.edge_count) == (3, 2, 3)
        assert g.label_frequencies() == {1: 2, 2: 1}
        assert max_label_frequency(g) == 2

    @pytest.mark.parametrize('edges, error, index', [
        ([(1, 1, 1), (1, 2, 1)], SelfLoopError, 0),
        ([(1, 2, 1), (2, 1, 1)], DuplicateEdgeError, 1),
        ([(1, 2, 1), (2, 4, 1)], NodeOutOfRangeError, 1),
        ([(1, 2, 1), (2, 3, 3)], LabelOutOfRangeError, 1),
    ])
    def test_edge_errors_name_the_edge(self, edges, error, index):
        with pytest.raises(error) as excinfo:
            build_graph(3, 2, edges)
        assert excinfo.value.edge_index == index

    def test_unused_label(self):
        with pytest.raises(UnusedLabelError):
            build_graph(3, 3, TRIANGLE)

    def test_disconnected(self):
        with pytest.raises(DisconnectedInputError):
            build_graph(4, 1, [(1, 2, 1), (3, 4, 1)])

    def test_single_node_needs_a_label(self):
        with pytest.raises(UnusedLabelError):
            build_graph(1, 1, [])

    def test_equality_ignores_edge_order(self):
        assert build_graph(3, 2, TRIANGLE) == build_graph(3, 2, list(reversed(TRIANGLE)))


class TestComponentCount:

    def test_triangle(self):
        g = build_graph(3, 2, TRIANGLE)
        assert component_count(g, LabelSubset.zeros(2)) == 3
        assert component_count(g, LabelSubset.from_labels(2, [2])) == 2
        assert component_count(g, LabelSubset.from_labels(2, [1])) == 1
        assert is_feasible(g, LabelSubset.ones(2))

    def test_g3_fixture(self, g3_b2):
        g = g3_b2.graph
        assert component_count(g, LabelSubset.zeros(3)) == 5
        assert component_count(g, LabelSubset.from_labels(3, [1])) == 3
        assert is_feasible(g, LabelSubset.from_labels(3, [2, 3]))

    def test_width_mismatch(self, g3_b2):
        with pytest.raises(WidthMismatchError):
            component_count(g3_b2.graph, LabelSubset.zeros(4))

    def test_monotone_under_label_addition(self, g1_k5):
        g = g1_k5.graph
        x = LabelSubset.from_labels(5, [1])
        assert component_count(g, x.with_labels(2)) <= component_count(g, x)

    def test_adding_labels_never_adds_components(self):
        rng = np.random.default_rng(12)
        for bundle in random_instances(30, seed=4):
            g = bundle.graph
            for _ in range(10):
                x = random_subset(g.label_count, rng)
                y = x.union(random_subset(g.label_count, rng))
                assert x.issubset(y)
                assert component_count(g, y) <= component_count(g, x)

    def test_matches_breadth_first_search(self):
        rng = np.random.default_rng(11)
        for bundle in random_instances(30, seed=3):
            g = bundle.graph
            for _ in range(5):
                x = random_subset(g.label_count, rng)
                assert component_count(g, x) == bfs_components(g, x)
            assert component_count(g, LabelSubset.ones(g.label_count)) == 1
            assert component_count(g, LabelSubset.zeros(g.label_count)) == g.node_count


class TestLabelSubset:

    def test_bits_put_first_label_first(self):
        x = LabelSubset.from_labels(4, [1, 3])
        assert x.bits() == '1010'
        assert x.labels() == (1, 3)
        assert x.unused_labels() == (2, 4)
        assert LabelSubset.from_bits('1010') == x

    def test_bits_reject_other_characters(self):
        with pytest.raises(ParseError, match="position 3"):
            LabelSubset.from_bits('01x0')

    def test_set_operations(self):
        x = LabelSubset.from_labels(5, [1, 2])
        assert x.with_labels(5).labels() == (1, 2, 5)
        assert x.without_labels(2).labels() == (1,)
        assert len(x.flipped(0b11111)) == 3
        assert LabelSubset.ones(5).difference(x).labels() == (3, 4, 5)
        assert x.issubset(LabelSubset.ones(5))
        assert x.hamming_distance(LabelSubset.zeros(5)) == 2

    def test_label_out_of_range(self):
        with pytest.raises(ValueError):
            LabelSubset.from_labels(3, [4])

    def test_width_mismatch_on_union(self):
        with pytest.raises(WidthMismatchError):
            LabelSubset.zeros(3).union(LabelSubset.zeros(4))

    def test_str(self):
        assert str(LabelSubset.from_labels(4, [2, 4])) == '{2, 4}'


class TestDisjointSet:

    def test_union_reports_merges(self):
        ds = DisjointSet(4)
        assert ds.union(0, 1)
        assert not ds.union(1, 0)
        assert ds.connected(0, 1)
        assert ds.count == 3


class TestInstanceFormat:

    def test_parse_with_comments(self):
        text = "# triangle\n3 2 3\n1 2 1  # first\n2 3 1\n\n1 3 2\n"
        g = parse_instance_text(text)
        assert g == build_graph(3, 2, TRIANGLE)

    def test_format_is_canonical(self):
        g = build_graph(3, 2, [(3, 2, 1), (2, 1, 1), (3, 1, 2)])
        assert format_instance_text(g) == "3 2 3\n1 2 1\n1 3 2\n2 3 1\n"
        assert parse_instance_text(format_instance_text(g)) == g

    def test_bad_edge_line_number(self):
        with pytest.raises(ParseError) as excinfo:
            parse_instance_text("3 2 3\n1 2 1\n2 2 1\n1 3 2\n")
        assert excinfo.value.line_number == 3

    def test_non_integer_field(self):
        with pytest.raises(ParseError) as excinfo:
            parse_instance_text("3 2 3\n1 2 x\n")
        assert excinfo.value.line_number == 2

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_instance_text("3 2 4\n1 2 1\n2 3 1\n1 3 2\n")

    def test_empty_text(self):
        with pytest.raises(ParseError):
            parse_instance_text("# nothing\n")
