from typing import Iterable, List, Optional, Sequence
import logging

import numpy as np

from plexembed.errors import PlexEmbedError
from plexembed.graph.edge_list_parser import EdgeListParser, ParsedEdge
from plexembed.graph.layer import Layer
from plexembed.graph.multihet_graph import BipartiteEdges, MultiHetGraph
from plexembed.graph.multiplex_graph import MultiplexGraph
from plexembed.graph.node_index import NodeIndex

logger = logging.getLogger(__name__)


class GraphBuildError(PlexEmbedError):
    pass


class GraphFactory:
    @staticmethod
    def build_multiplex(
        edge_lists: Sequence[Iterable[ParsedEdge]], layer_names: Optional[Sequence[str]] = None
    ) -> MultiplexGraph:
        """
        The node set is the union of the labels of every layer; a node missing
        from one layer's edge list is isolated in that layer.
        """
        edge_lists = [list(edges) for edges in edge_lists]
        if not edge_lists:
            raise GraphBuildError("A multiplex graph needs at least one layer")
        if not any(edge_lists):
            raise GraphBuildError("A multiplex graph needs at least one edge")

        layer_names = list(layer_names) if layer_names else [f"layer{i + 1}" for i in range(len(edge_lists))]
        if len(layer_names) != len(edge_lists):
            raise GraphBuildError(f"Got {len(layer_names)} layer names for {len(edge_lists)} layers")

        nodes = NodeIndex()
        for edges in edge_lists:
            for edge in edges:
                nodes.add(edge.source)
                nodes.add(edge.target)

        layers = [
            GraphFactory._create_layer(edges, nodes, name) for edges, name in zip(edge_lists, layer_names)
        ]
        return MultiplexGraph(layers, nodes)

    @staticmethod
    def build_multiplex_from_files(paths: Sequence[str], layer_names: Optional[Sequence[str]] = None) -> MultiplexGraph:
        edge_lists = [EdgeListParser.parse_file(path).edges for path in paths]
        return GraphFactory.build_multiplex(edge_lists, layer_names=layer_names)

    @staticmethod
    def build_multihet(
        mplex1: MultiplexGraph, mplex2: MultiplexGraph, bipartite_edges: Iterable[ParsedEdge]
    ) -> MultiHetGraph:
        """
        Left labels resolve against the first multiplex, right labels against the
        second. Unresolvable edges are dropped and counted. The two multiplexes
        must not share a label, since embedding rows are addressed by label.
        """
        shared = [label for label in mplex2.nodes if label in mplex1.nodes]
        if shared:
            preview = ", ".join(shared[:5])
            raise GraphBuildError(f"{len(shared)} labels appear in both multiplexes (e.g. {preview}); prefix one side")

        pairs: List[tuple] = []
        dropped = 0
        for edge in bipartite_edges:
            left = mplex1.nodes.find_id(edge.source)
            right = mplex2.nodes.find_id(edge.target)
            if left is None or right is None:
                dropped += 1
                continue
            pairs.append((left, right))

        if dropped:
            logger.warning(f"Dropped {dropped} bipartite edges with unknown endpoints")
        if not pairs:
            raise GraphBuildError("No bipartite edge resolves to nodes of both multiplexes")

        bipartite = BipartiteEdges(pairs, n_left=mplex1.n, n_right=mplex2.n, dropped=dropped)
        return MultiHetGraph(mplex1, mplex2, bipartite)

    @staticmethod
    def _create_layer(edges: List[ParsedEdge], nodes: NodeIndex, name: str) -> Layer:
        sources = np.array([nodes.get_id(edge.source) for edge in edges], dtype=np.int64)
        targets = np.array([nodes.get_id(edge.target) for edge in edges], dtype=np.int64)
        weights = np.array([edge.weight for edge in edges], dtype=np.float64)
        return Layer.from_pairs(len(nodes), sources, targets, weights, name=name)
