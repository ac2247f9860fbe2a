import io

import numpy as np
import pytest
from conftest import multiplex_from_pairs

from plexembed.errors import ConfigError, UnknownNodeError
from plexembed.graph import (
    ColumnNormalizer,
    EdgeListParseError,
    EdgeListParser,
    EdgeListWriter,
    GraphBuildError,
    GraphFactory,
    Layer,
    MultiplexManifest,
    NodeIndex,
    ParsedEdge,
)
from plexembed.stats import GraphStats


class TestEdgeListParser:
    def test_default_weight_is_one(self):
        result = EdgeListParser.parse("a b\nb c\n")
        assert result.edges == [ParsedEdge("a", "b", 1.0), ParsedEdge("b", "c", 1.0)]

    def test_self_loop_is_dropped_and_counted(self):
        result = EdgeListParser.parse("a a\n")
        assert result.edges == []
        assert result.self_loops_dropped == 1

    def test_duplicate_keeps_first_weight(self):
        result = EdgeListParser.parse("a b 0.5\nb a 0.7\n")
        assert result.edges == [ParsedEdge("a", "b", 0.5)]
        assert result.duplicates_merged == 1

    def test_comments_blank_lines_and_tabs(self):
        result = EdgeListParser.parse(io.StringIO("# header\n\na\tb\n  # indented comment\nb c 2\n"))
        assert [(edge.source, edge.target, edge.weight) for edge in result] == [("a", "b", 1.0), ("b", "c", 2.0)]

    @pytest.mark.parametrize(
        "text, line_number",
        [
            ("a b\nc\n", 2),
            ("a b c d\n", 1),
            ("a b 0\n", 1),
            ("a b -1\n", 1),
            ("x y\na b heavy\n", 2),
            ("a b nan\n", 1),
        ],
    )
    def test_malformed_lines_report_line_number(self, text, line_number):
        with pytest.raises(EdgeListParseError) as error:
            EdgeListParser.parse(text)
        assert error.value.line_number == line_number


class TestNodeIndex:
    def test_ids_follow_first_appearance(self):
        nodes = NodeIndex(["c", "a", "c", "b"])
        assert nodes.labels == ["c", "a", "b"]
        assert [nodes.get_id(label) for label in ("c", "a", "b")] == [0, 1, 2]

    def test_unknown_label(self):
        with pytest.raises(UnknownNodeError) as error:
            NodeIndex(["a"]).get_id("zzz")
        assert error.value.label == "zzz"
        assert NodeIndex(["a"]).find_id("zzz") is None


class TestLayer:
    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValueError):
            Layer(np.array([[0, 1], [0, 0]]))

    def test_drops_the_diagonal(self):
        layer = Layer(np.array([[1.0, 1.0], [1.0, 0.0]]))
        assert layer.adjacency.diagonal().tolist() == [0.0, 0.0]
        assert layer.edge_count == 1

    def test_edges_are_upper_triangle(self):
        layer = Layer.from_pairs(4, [2, 0, 3], [0, 1, 1])
        sources, targets, weights = layer.edges()
        assert list(zip(sources.tolist(), targets.tolist())) == [(0, 1), (0, 2), (1, 3)]
        assert weights.tolist() == [1.0, 1.0, 1.0]
        assert layer.has_edge(1, 3) and layer.has_edge(3, 1)
        assert not layer.has_edge(2, 3)


class TestGraphFactory:
    def test_union_node_set(self):
        graph = multiplex_from_pairs([("a", "b")], [("b", "c")])
        assert graph.n == 3
        assert graph.layer_count == 2
        c, a = graph.nodes.get_id("c"), graph.nodes.get_id("a")
        assert graph.layers[0].degrees[c] == 0
        assert graph.layers[1].degrees[a] == 0

    def test_single_layer(self):
        graph = multiplex_from_pairs([("a", "b"), ("b", "c")])
        assert (graph.n, graph.layer_count, graph.edge_count) == (3, 1, 2)

    def test_layers_are_symmetric_with_zero_diagonal(self, toy_multiplex):
        for layer in toy_multiplex.layers:
            assert (layer.adjacency != layer.adjacency.T).nnz == 0
            assert not layer.adjacency.diagonal().any()

    def test_empty_input(self):
        with pytest.raises(GraphBuildError):
            GraphFactory.build_multiplex([])
        with pytest.raises(GraphBuildError):
            GraphFactory.build_multiplex([[], []])

    def test_layer_names_default(self, toy_multiplex):
        assert toy_multiplex.layer_names == ["layer1", "layer2"]

    def test_minimal_multihet(self):
        first = multiplex_from_pairs([("a", "b")])
        second = multiplex_from_pairs([("x", "y")])
        graph = GraphFactory.build_multihet(first, second, [ParsedEdge("a", "x")])
        assert graph.bipartite.pairs == {(0, 0)}
        assert graph.n_total == 4
        assert graph.node_types == ["first", "first", "second", "second"]

    def test_unresolvable_bipartite_edges_are_dropped(self):
        first = multiplex_from_pairs([("a", "b")])
        second = multiplex_from_pairs([("x", "y")])
        graph = GraphFactory.build_multihet(first, second, [ParsedEdge("a", "x"), ParsedEdge("a", "a_unknown")])
        assert graph.bipartite.count == 1
        assert graph.bipartite.dropped == 1

    def test_no_resolvable_bipartite_edge(self):
        first = multiplex_from_pairs([("a", "b")])
        second = multiplex_from_pairs([("x", "y")])
        with pytest.raises(GraphBuildError):
            GraphFactory.build_multihet(first, second, [ParsedEdge("x", "a")])

    def test_labels_shared_by_both_multiplexes(self):
        first = multiplex_from_pairs([("1", "2"), ("2", "3")])
        second = multiplex_from_pairs([("3", "4")])
        with pytest.raises(GraphBuildError, match="both multiplexes"):
            GraphFactory.build_multihet(first, second, [ParsedEdge("1", "4")])


class TestColumnNormalizer:
    def test_path(self, path_graph):
        normalized = ColumnNormalizer.normalize(path_graph.layers[0])
        assert normalized.matrix.toarray().tolist() == [[0.0, 1.0], [1.0, 0.0]]
        assert len(normalized.zero_degree) == 0

    def test_star_center_splits_uniformly(self):
        graph = multiplex_from_pairs([("c", "x"), ("c", "y"), ("c", "z")])
        column = ColumnNormalizer.normalize(graph.layers[0]).matrix.toarray()[:, graph.nodes.get_id("c")]
        assert sorted(column.tolist()) == pytest.approx([0.0, 1 / 3, 1 / 3, 1 / 3])

    def test_isolated_column_is_flagged(self):
        graph = multiplex_from_pairs([("a", "b")], [("b", "c")])
        normalized = ColumnNormalizer.normalize(graph.layers[0])
        c = graph.nodes.get_id("c")
        assert normalized.zero_degree.tolist() == [c]
        assert normalized.zero_degree_mask[c]
        assert not normalized.matrix[:, c].toarray().any()

    def test_weighted_columns_sum_to_one(self):
        graph = GraphFactory.build_multiplex([EdgeListParser.parse("a b 2\nb c 0.5\na c 3\nc d 1\n").edges])
        sums = np.asarray(ColumnNormalizer.normalize(graph.layers[0]).matrix.sum(axis=0)).ravel()
        assert sums == pytest.approx(np.ones(4), abs=1e-12)


class TestEdgeListWriter:
    def test_serialized_layer_parses_back(self, toy_multiplex):
        for layer in toy_multiplex.layers:
            sources, targets, _ = layer.edges()
            expected = {
                frozenset((toy_multiplex.nodes.get_label(u), toy_multiplex.nodes.get_label(v)))
                for u, v in zip(sources.tolist(), targets.tolist())
            }
            text = EdgeListWriter.to_text(layer, toy_multiplex.nodes)
            assert {frozenset((edge.source, edge.target)) for edge in EdgeListParser.parse(text)} == expected

    def test_weights_are_written_for_weighted_layers(self):
        graph = GraphFactory.build_multiplex([EdgeListParser.parse("a b 0.25\n").edges])
        assert EdgeListWriter.to_text(graph.layers[0], graph.nodes) == "a\tb\t0.25\n"


class TestMultiplexManifest:
    def test_paths_resolve_against_the_manifest(self, write_files):
        root = write_files(
            {"net/one.txt": "a b\n", "net/two.txt": "b c\n", "net/layers.txt": "# layers\none.txt\n\ntwo.txt\n"}
        )
        paths = MultiplexManifest.read(str(root / "net" / "layers.txt"))
        assert paths == [str(root / "net" / "one.txt"), str(root / "net" / "two.txt")]
        assert MultiplexManifest.layer_names(paths) == ["one", "two"]

    def test_missing_layer_file(self, write_files):
        root = write_files({"layers.txt": "one.txt\n"})
        with pytest.raises(ConfigError):
            MultiplexManifest.read(str(root / "layers.txt"))

    def test_empty_manifest(self, write_files):
        root = write_files({"layers.txt": "# nothing\n"})
        with pytest.raises(ConfigError):
            MultiplexManifest.read(str(root / "layers.txt"))


class TestGraphStats:
    def test_summary_lists_largest_layer_first(self):
        graph = multiplex_from_pairs([("a", "b")], [("a", "b"), ("b", "c"), ("c", "a")])
        summary = GraphStats(graph).summary()
        assert [row["edges"] for row in summary] == [3, 1]
        assert summary[1]["isolated"] == 1
