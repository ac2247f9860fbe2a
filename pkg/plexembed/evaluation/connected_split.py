from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.sparse import csgraph

from plexembed.graph import Layer, MultiplexGraph


@dataclass(frozen=True)
class EdgeSplit:
    """Train/test partition of one layer's edges; arrays hold (u, v) with u < v."""

    train: np.ndarray
    train_weights: np.ndarray
    test: np.ndarray
    forest_size: int

    @property
    def is_test_empty(self) -> bool:
        return len(self.test) == 0


class ConnectedSplitter:
    """
    Holds out a fraction of a layer's edges while a uniform random spanning
    forest, drawn with Broder's random-walk cover in every component, stays in
    the training edges.
    """

    @staticmethod
    def split(layer: Layer, test_fraction: float, rng: np.random.Generator) -> EdgeSplit:
        sources, targets, weights = layer.edges()
        edge_total = len(sources)

        forest = ConnectedSplitter.spanning_forest(layer, rng)
        codes = sources * layer.n + targets
        protected = np.isin(codes, [u * layer.n + v for u, v in forest])

        count = min(int(np.floor(test_fraction * edge_total)), edge_total - len(forest))
        candidates = np.flatnonzero(~protected)
        test_positions = np.sort(rng.choice(candidates, size=count, replace=False)) if count > 0 else np.array([], int)

        is_test = np.zeros(edge_total, dtype=bool)
        is_test[test_positions] = True

        return EdgeSplit(
            train=np.column_stack([sources[~is_test], targets[~is_test]]),
            train_weights=weights[~is_test],
            test=np.column_stack([sources[is_test], targets[is_test]]).reshape(-1, 2),
            forest_size=len(forest),
        )

    @staticmethod
    def spanning_forest(layer: Layer, rng: np.random.Generator) -> List[Tuple[int, int]]:
        """Broder's algorithm: walk until every node is covered, keep each first-entrance edge."""
        component_count, component_of = csgraph.connected_components(layer.adjacency, directed=False)
        degrees = layer.degrees
        visited = np.zeros(layer.n, dtype=bool)
        forest: List[Tuple[int, int]] = []

        for component in range(component_count):
            members = np.flatnonzero(component_of == component)
            if len(members) < 2:
                continue

            current = int(members[rng.integers(len(members))])
            visited[current] = True
            remaining = len(members) - 1

            while remaining:
                neighbors = layer.neighbors(current)
                following = int(neighbors[rng.integers(degrees[current])])
                if not visited[following]:
                    visited[following] = True
                    remaining -= 1
                    forest.append((min(current, following), max(current, following)))
                current = following

        return forest

    @staticmethod
    def split_multiplex(
        graph: MultiplexGraph, test_fraction: float, rng: np.random.Generator
    ) -> Tuple[MultiplexGraph, List[EdgeSplit]]:
        splits = [ConnectedSplitter.split(layer, test_fraction, rng) for layer in graph.layers]
        train_layers = [
            layer.with_edges(split.train[:, 0], split.train[:, 1], split.train_weights)
            for layer, split in zip(graph.layers, splits)
        ]
        return graph.with_layers(train_layers), splits
