from typing import List

from plexembed.graph.layer import Layer
from plexembed.graph.node_index import NodeIndex


class EdgeListWriter:
    @staticmethod
    def to_text(layer: Layer, nodes: NodeIndex, with_weights: bool = None) -> str:
        """Serialize a layer in the format EdgeListParser reads back."""
        with_weights = layer.is_weighted if with_weights is None else with_weights
        sources, targets, weights = layer.edges()

        lines: List[str] = []
        for u, v, weight in zip(sources.tolist(), targets.tolist(), weights.tolist()):
            line = f"{nodes.get_label(u)}\t{nodes.get_label(v)}"
            if with_weights:
                line += f"\t{weight!r}"
            lines.append(line)

        return "\n".join(lines) + ("\n" if lines else "")

    @staticmethod
    def write(path: str, layer: Layer, nodes: NodeIndex) -> None:
        with open(path, "w") as file:
            file.write(EdgeListWriter.to_text(layer, nodes))
