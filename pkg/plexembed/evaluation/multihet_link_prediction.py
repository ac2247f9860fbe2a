import time
from typing import Optional, Tuple
import logging

import numpy as np

from plexembed.evaluation.eval_report import EvalReport, EvalRow
from plexembed.evaluation.feature_scoring import ClassifierBuilder, FeatureScoring
from plexembed.evaluation.labeled_edge_set import LabeledEdgeSet
from plexembed.evaluation.link_prediction import EvaluationError
from plexembed.evaluation.metrics import Metrics
from plexembed.evaluation.non_edge_sampler import NonEdgeSampler, PairSpace
from plexembed.evaluation.pipeline_config import PipelineConfig
from plexembed.evaluation.split_config import SplitScope
from plexembed.graph import BipartiteEdges, MultiHetGraph
from plexembed.prebuilt import Embedder

logger = logging.getLogger(__name__)


class MultiHetLinkPredictionEvaluator:
    """
    Hold out a fraction of the bipartite edges only (layers stay untouched),
    embed the remaining multiplex-heterogeneous graph and score the held-out
    edges against bipartite non-edges, one classifier per operator.
    """

    def __init__(self, config: PipelineConfig = None, classifier_builder: Optional[ClassifierBuilder] = None):
        self.config = config or PipelineConfig()
        self.classifier_builder = classifier_builder

    def evaluate(self, graph: MultiHetGraph) -> EvalReport:
        start_time = time.time()
        config = self.config
        if graph.bipartite.count == 0:
            raise EvaluationError("The bipartite edge set is empty")

        rng = np.random.default_rng(config.split.rng_seed)
        kept, held_out = self.split_bipartite(graph.bipartite, config.split.test_fraction, rng)
        if held_out.count == 0:
            raise EvaluationError("The bipartite split held out no edge")

        train_graph = graph.with_bipartite(kept)
        train_edges, test_edges = self.build_edge_sets(graph, kept, held_out, rng)
        logger.info(f"Bipartite split: {kept.count} kept, {held_out.count} held out")

        embedding = Embedder(config.rwr, config.train).embed(train_graph)

        report = EvalReport()
        split_description = f"test_fraction={config.split.test_fraction};scope={SplitScope.BIPARTITE_ONLY.value}"
        for kind in config.operators:
            train_features = FeatureScoring.operator_features(kind, embedding.W, train_edges, config.halved_average)
            test_features = FeatureScoring.operator_features(kind, embedding.W, test_edges, config.halved_average)
            scores, description = FeatureScoring.fit_and_score(
                train_features, train_edges.labels, test_features, config.classifier, self.classifier_builder
            )
            report.add(
                EvalRow(
                    method=config.method,
                    operator=kind.value,
                    metric="roc_auc",
                    value=Metrics.roc_auc(scores, test_edges.labels),
                    seed=config.split.rng_seed,
                    split=split_description,
                    layer="bipartite",
                    classifier=description,
                )
            )

        logger.info(f"Execution time of evaluate_mh_link_prediction: {time.time() - start_time:.2f} seconds")
        return report

    @staticmethod
    def split_bipartite(
        bipartite: BipartiteEdges, test_fraction: float, rng: np.random.Generator
    ) -> Tuple[BipartiteEdges, BipartiteEdges]:
        count = int(np.floor(test_fraction * bipartite.count))
        held_positions = rng.choice(bipartite.count, size=count, replace=False)
        is_held = np.zeros(bipartite.count, dtype=bool)
        is_held[held_positions] = True
        return bipartite.subset(np.flatnonzero(~is_held)), bipartite.subset(np.flatnonzero(is_held))

    @staticmethod
    def build_edge_sets(
        graph: MultiHetGraph, kept: BipartiteEdges, held_out: BipartiteEdges, rng: np.random.Generator
    ) -> Tuple[LabeledEdgeSet, LabeledEdgeSet]:
        """Pairs come back in embedding ids: second-multiplex nodes are shifted by n."""
        space = PairSpace.bipartite_of(graph)
        train_negatives = NonEdgeSampler.sample(space, kept.count, rng)
        test_negatives = NonEdgeSampler.sample(
            space, held_out.count, rng, exclude=set(space.encode(train_negatives).tolist())
        )

        def to_global(pairs: np.ndarray) -> np.ndarray:
            return np.column_stack([pairs[:, 0], pairs[:, 1] + graph.n]).reshape(-1, 2)

        train_positives = np.column_stack([kept.left, kept.right]).reshape(-1, 2)
        test_positives = np.column_stack([held_out.left, held_out.right]).reshape(-1, 2)
        return (
            LabeledEdgeSet.from_positives_and_negatives(to_global(train_positives), to_global(train_negatives)),
            LabeledEdgeSet.from_positives_and_negatives(to_global(test_positives), to_global(test_negatives)),
        )
