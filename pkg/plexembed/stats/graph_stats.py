from typing import List, Optional, Union

import numpy as np

from plexembed.graph import MultiHetGraph, MultiplexGraph
from plexembed.logger import Logger


class GraphStats:
    def __init__(self, graph: Union[MultiplexGraph, MultiHetGraph]):
        self.graph = graph
        self.layer_stats = []
        self._analize()

    def _analize(self):
        multiplexes = [self.graph] if isinstance(self.graph, MultiplexGraph) else [self.graph.mplex1, self.graph.mplex2]
        for position, multiplex in enumerate(multiplexes):
            for layer in multiplex.layers:
                self.layer_stats.append(
                    {
                        "multiplex": position,
                        "name": layer.name,
                        "nodes": layer.n,
                        "edges": layer.edge_count,
                        "isolated": int(np.sum(layer.degrees == 0)),
                    }
                )

        self._sort_stats()

    def _sort_stats(self):
        self.layer_stats.sort(key=lambda x: x["edges"], reverse=True)

    def summary(self) -> List[dict]:
        return list(self.layer_stats)

    def print(self, limit: Optional[int] = None):
        layer_stats = self.layer_stats
        if limit:
            layer_stats = layer_stats[:limit]

        Logger.log(f"Top {len(layer_stats)} layers by edge count:")
        Logger.log(f"Total layers: {len(self.layer_stats)}")
        for stat in layer_stats:
            Logger.log(f"{stat['name']} - {stat['edges']} edges - {stat['nodes']} nodes - {stat['isolated']} isolated")

        if isinstance(self.graph, MultiHetGraph):
            Logger.log(f"Bipartite edges: {self.graph.bipartite.count} ({self.graph.bipartite.dropped} dropped)")
