import time
from typing import Optional
import logging

import numpy as np

from plexembed.edge_features import LinkHeuristics
from plexembed.errors import PlexEmbedError
from plexembed.evaluation.connected_split import ConnectedSplitter
from plexembed.evaluation.eval_report import EvalReport, EvalRow
from plexembed.evaluation.feature_scoring import ClassifierBuilder, FeatureScoring
from plexembed.evaluation.labeled_edge_set import LabeledEdgeSet
from plexembed.evaluation.metrics import Metrics
from plexembed.evaluation.non_edge_sampler import NonEdgeSampler, PairSpace
from plexembed.evaluation.pipeline_config import PipelineConfig
from plexembed.graph import MultiplexGraph
from plexembed.prebuilt import Embedder

logger = logging.getLogger(__name__)


class EvaluationError(PlexEmbedError):
    pass


class LinkPredictionEvaluator:
    """
    Hold out edges of every layer with a connected split, embed the remaining
    multiplex, and score held-out edges against sampled non-edges with one
    classifier per embedding operator and per averaged heuristic.
    """

    def __init__(self, config: PipelineConfig = None, classifier_builder: Optional[ClassifierBuilder] = None):
        self.config = config or PipelineConfig()
        self.classifier_builder = classifier_builder

    def evaluate(self, graph: MultiplexGraph) -> EvalReport:
        start_time = time.time()
        config = self.config
        rng = np.random.default_rng(config.split.rng_seed)

        train_graph, splits = ConnectedSplitter.split_multiplex(graph, config.split.test_fraction, rng)
        train_edges, test_edges = self.build_edge_sets(graph, train_graph, splits, rng)
        logger.info(
            f"Link prediction split: {train_edges.positive_count} train edges, {test_edges.positive_count} test edges"
        )

        embedding = Embedder(config.rwr, config.train).embed(train_graph)

        report = EvalReport()
        for kind in config.operators:
            train_features = FeatureScoring.operator_features(kind, embedding.W, train_edges, config.halved_average)
            test_features = FeatureScoring.operator_features(kind, embedding.W, test_edges, config.halved_average)
            report.add(self._row(kind.value, train_features, train_edges, test_features, test_edges))

        for kind in config.heuristics:
            train_features = LinkHeuristics.pair_features(kind, train_graph, train_edges.pairs)
            test_features = LinkHeuristics.pair_features(kind, train_graph, test_edges.pairs)
            report.add(self._row(f"{kind.value}-av", train_features, train_edges, test_features, test_edges))

        logger.info(f"Execution time of evaluate_link_prediction: {time.time() - start_time:.2f} seconds")
        return report

    @staticmethod
    def build_edge_sets(graph: MultiplexGraph, train_graph: MultiplexGraph, splits, rng: np.random.Generator):
        """
        Positives are the union of layer edges; a pair held out from one layer
        but kept in another stays a training edge. Negatives are absent from
        every layer, with fresh samples for the test set.
        """
        space = PairSpace.multiplex(graph)
        train_codes = PairSpace.multiplex(train_graph).present
        test_codes = set()
        for split in splits:
            test_codes.update(space.encode(split.test).tolist())
        test_codes -= train_codes

        if not test_codes:
            raise EvaluationError("The connected split held out no edge, the layers are too sparse")

        train_positives = space.decode(sorted(train_codes))
        test_positives = space.decode(sorted(test_codes))

        train_negatives = NonEdgeSampler.sample(space, len(train_positives), rng)
        test_negatives = NonEdgeSampler.sample(
            space, len(test_positives), rng, exclude=set(space.encode(train_negatives).tolist())
        )
        return (
            LabeledEdgeSet.from_positives_and_negatives(train_positives, train_negatives),
            LabeledEdgeSet.from_positives_and_negatives(test_positives, test_negatives),
        )

    def _row(self, operator: str, train_features, train_edges, test_features, test_edges) -> EvalRow:
        scores, description = FeatureScoring.fit_and_score(
            train_features, train_edges.labels, test_features, self.config.classifier, self.classifier_builder
        )
        return EvalRow(
            method=self.config.method,
            operator=operator,
            metric="roc_auc",
            value=Metrics.roc_auc(scores, test_edges.labels),
            seed=self.config.split.rng_seed,
            split=self.config.split.describe(),
            classifier=description,
        )
