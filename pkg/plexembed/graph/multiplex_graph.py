from typing import List

from plexembed.graph.layer import Layer
from plexembed.graph.node_index import NodeIndex


class MultiplexGraph:
    """L undirected layers over one shared node index. Treated as immutable once built."""

    layers: List[Layer]
    nodes: NodeIndex

    def __init__(self, layers: List[Layer], nodes: NodeIndex):
        if not layers:
            raise ValueError("A multiplex graph needs at least one layer")

        for layer in layers:
            if layer.n != len(nodes):
                raise ValueError(f"{layer} does not match the node index size {len(nodes)}")

        self.layers = list(layers)
        self.nodes = nodes

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def layer_count(self) -> int:
        return len(self.layers)

    @property
    def layer_names(self) -> List[str]:
        return [layer.name for layer in self.layers]

    @property
    def edge_count(self) -> int:
        return sum(layer.edge_count for layer in self.layers)

    def with_layers(self, layers: List[Layer]) -> "MultiplexGraph":
        return MultiplexGraph(layers, self.nodes)

    def has_edge_in_any_layer(self, u: int, v: int) -> bool:
        return any(layer.has_edge(u, v) for layer in self.layers)

    def __str__(self) -> str:
        return f"MultiplexGraph(n={self.n}, layers={self.layer_count}, edges={self.edge_count})"
