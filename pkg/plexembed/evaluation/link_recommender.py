from typing import List, Optional, Tuple

import numpy as np

from plexembed.edge_features import OperatorKind
from plexembed.embedding import EmbeddingMatrix
from plexembed.evaluation.feature_scoring import ClassifierBuilder, FeatureScoring
from plexembed.evaluation.labeled_edge_set import LabeledEdgeSet
from plexembed.evaluation.non_edge_sampler import NonEdgeSampler, PairSpace
from plexembed.evaluation.pipeline_config import PipelineConfig
from plexembed.graph import MultiHetGraph


class LinkRecommender:
    """
    Ranks new bipartite partners for one node: a classifier learns every
    known bipartite edge against as many non-edges, then scores all pairs
    between the query and the other side that are not linked yet.
    """

    def __init__(self, config: PipelineConfig = None, classifier_builder: Optional[ClassifierBuilder] = None):
        self.config = config or PipelineConfig()
        self.classifier_builder = classifier_builder

    def recommend(
        self,
        graph: MultiHetGraph,
        embedding: EmbeddingMatrix,
        query: str,
        top_k: int = 5,
        operator: OperatorKind = OperatorKind.HADAMARD,
        query_second: bool = False,
    ) -> List[Tuple[str, float]]:
        if top_k < 1:
            raise ValueError(f"top_k must be positive, got {top_k}")

        rng = np.random.default_rng(self.config.split.rng_seed)
        space = PairSpace.bipartite_of(graph)
        known = np.column_stack([graph.bipartite.left, graph.bipartite.right])
        negatives = NonEdgeSampler.sample(space, graph.bipartite.count, rng)
        train_edges = LabeledEdgeSet.from_positives_and_negatives(
            self._to_global(graph, known), self._to_global(graph, negatives)
        )

        candidates = self._candidate_pairs(graph, space, query, query_second)
        if len(candidates) == 0:
            return []
        candidate_edges = LabeledEdgeSet(pairs=self._to_global(graph, candidates), labels=np.zeros(len(candidates)))

        scores, _ = FeatureScoring.fit_and_score(
            FeatureScoring.operator_features(operator, embedding.W, train_edges, self.config.halved_average),
            train_edges.labels,
            FeatureScoring.operator_features(operator, embedding.W, candidate_edges, self.config.halved_average),
            self.config.classifier,
            self.classifier_builder,
        )

        order = np.argsort(-scores, kind="stable")[:top_k]
        other = graph.mplex1.nodes if query_second else graph.mplex2.nodes
        column = 0 if query_second else 1
        return [(other.get_label(int(candidates[i, column])), float(scores[i])) for i in order]

    @staticmethod
    def _candidate_pairs(graph: MultiHetGraph, space: PairSpace, query: str, query_second: bool) -> np.ndarray:
        if query_second:
            right = graph.mplex2.nodes.get_id(query)
            pairs = np.column_stack([np.arange(graph.n), np.full(graph.n, right)])
        else:
            left = graph.mplex1.nodes.get_id(query)
            pairs = np.column_stack([np.full(graph.m, left), np.arange(graph.m)])
        absent = ~np.isin(space.encode(pairs), list(space.present))
        return pairs[absent]

    @staticmethod
    def _to_global(graph: MultiHetGraph, pairs: np.ndarray) -> np.ndarray:
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        return np.column_stack([pairs[:, 0], pairs[:, 1] + graph.n])
