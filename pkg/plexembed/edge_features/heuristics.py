import math

import numpy as np

from plexembed.edge_features.operator_kind import HeuristicKind
from plexembed.graph import Layer, MultiplexGraph


class LinkHeuristics:
    """Neighbourhood scores of a node pair on one layer, and their mean over layers."""

    @staticmethod
    def score(kind: HeuristicKind, u: int, v: int, layer: Layer) -> float:
        neighbors_u, neighbors_v = layer.neighbors(u), layer.neighbors(v)

        if kind == HeuristicKind.PA:
            return float(len(neighbors_u) * len(neighbors_v))

        common = np.intersect1d(neighbors_u, neighbors_v, assume_unique=True)
        if kind == HeuristicKind.CN:
            return float(len(common))
        if kind == HeuristicKind.JC:
            union = len(neighbors_u) + len(neighbors_v) - len(common)
            return len(common) / union if union else 0.0
        if kind == HeuristicKind.AA:
            degrees = layer.degrees[common]
            # log(1) = 0, degree-one common neighbours are skipped
            return float(sum(1.0 / math.log(degree) for degree in degrees.tolist() if degree > 1))

        raise ValueError(f"Heuristic {kind} is not supported")

    @staticmethod
    def average(kind: HeuristicKind, u: int, v: int, graph: MultiplexGraph) -> float:
        return sum(LinkHeuristics.score(kind, u, v, layer) for layer in graph.layers) / graph.layer_count

    @staticmethod
    def pair_features(kind: HeuristicKind, graph: MultiplexGraph, pairs: np.ndarray) -> np.ndarray:
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        scores = [LinkHeuristics.average(kind, u, v, graph) for u, v in pairs.tolist()]
        return np.array(scores, dtype=np.float64).reshape(-1, 1)
