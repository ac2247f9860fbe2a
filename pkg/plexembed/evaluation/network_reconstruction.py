import time
from dataclasses import replace
from typing import Optional
import logging

import numpy as np

from plexembed.embedding import EmbeddingMatrix
from plexembed.evaluation.eval_report import EvalReport, EvalRow
from plexembed.evaluation.feature_scoring import ClassifierBuilder, FeatureScoring
from plexembed.evaluation.labeled_edge_set import LabeledEdgeSet
from plexembed.evaluation.metrics import Metrics
from plexembed.evaluation.pipeline_config import PipelineConfig
from plexembed.graph import Layer, MultiplexGraph
from plexembed.prebuilt import Embedder

logger = logging.getLogger(__name__)


class NetworkReconstructionEvaluator:
    """
    Embed the full multiplex, then per layer fit a classifier on a random
    subset of all node pairs labelled by adjacency and report precision@K on
    that same subset, K being the number of true edges in it.

    The built-in classifier is class-weighted logistic regression; a forest can
    be selected with `ClassifierHyper(kind="forest")`.
    """

    def __init__(self, config: PipelineConfig = None, classifier_builder: Optional[ClassifierBuilder] = None):
        config = config or PipelineConfig()
        if not config.classifier.class_weighted:
            config = replace(config, classifier=replace(config.classifier, class_weighted=True))
        self.config = config
        self.classifier_builder = classifier_builder

    def evaluate(
        self, graph: MultiplexGraph, subset_fraction: float, embedding: Optional[EmbeddingMatrix] = None
    ) -> EvalReport:
        if not 0 < subset_fraction <= 1:
            raise ValueError(f"subset_fraction must be in (0, 1], got {subset_fraction}")

        start_time = time.time()
        config = self.config
        rng = np.random.default_rng(config.split.rng_seed)
        embedding = embedding or Embedder(config.rwr, config.train).embed(graph)
        split_description = f"subset_fraction={subset_fraction}"

        report = EvalReport()
        per_operator = {kind: [] for kind in config.operators}
        for layer in graph.layers:
            pairs = self.sample_pairs(layer, subset_fraction, rng)
            edges = LabeledEdgeSet(pairs=pairs, labels=self.label_pairs(layer, pairs))
            k = edges.positive_count
            if k == 0:
                logger.warning(f"Layer {layer.name}: sampled subset holds no edge, skipping")
                continue
            if k == len(edges):
                logger.warning(f"Layer {layer.name}: sampled subset holds no non-edge, skipping")
                continue

            for kind in config.operators:
                features = FeatureScoring.operator_features(kind, embedding.W, edges, config.halved_average)
                scores, description = FeatureScoring.fit_and_score(
                    features, edges.labels, features, config.classifier, self.classifier_builder
                )
                value = Metrics.precision_at_k(scores, edges.labels, k)
                per_operator[kind].append(value)
                report.add(self._row(kind.value, layer.name, value, split_description, description))

        for kind, values in per_operator.items():
            if values:
                report.add(self._row(kind.value, "average", float(np.mean(values)), split_description, ""))

        logger.info(f"Execution time of evaluate_network_reconstruction: {time.time() - start_time:.2f} seconds")
        return report

    @staticmethod
    def pair_universe_size(n: int) -> int:
        return n * (n - 1) // 2

    @staticmethod
    def sample_pairs(layer: Layer, subset_fraction: float, rng: np.random.Generator) -> np.ndarray:
        """Uniform sample without replacement of unordered pairs (u < v)."""
        universe = NetworkReconstructionEvaluator.pair_universe_size(layer.n)
        size = min(universe, max(1, int(round(subset_fraction * universe))))
        codes = np.sort(rng.choice(universe, size=size, replace=False))
        return NetworkReconstructionEvaluator.decode_upper_triangle(codes, layer.n)

    @staticmethod
    def decode_upper_triangle(codes: np.ndarray, n: int) -> np.ndarray:
        """Row-major index of the strict upper triangle back to (u, v)."""
        codes = np.asarray(codes, dtype=np.int64)
        total = n * (n - 1) // 2
        # k-th pair from the end lives in row n - 2 - floor((sqrt(8 k' + 1) - 1) / 2), k' = total - 1 - k
        from_end = total - 1 - codes
        back_rows = ((np.sqrt(8.0 * from_end + 1.0) - 1.0) // 2).astype(np.int64)
        back_rows = NetworkReconstructionEvaluator._fix_triangular_roots(back_rows, from_end)
        rows = n - 2 - back_rows

        row_starts = rows * n - rows * (rows + 1) // 2
        cols = codes - row_starts + rows + 1
        return np.column_stack([rows, cols]).reshape(-1, 2)

    @staticmethod
    def label_pairs(layer: Layer, pairs: np.ndarray) -> np.ndarray:
        if len(pairs) == 0:
            return np.zeros(0, dtype=np.int64)
        values = np.asarray(layer.adjacency[pairs[:, 0], pairs[:, 1]]).ravel()
        return (values > 0).astype(np.int64)

    @staticmethod
    def _fix_triangular_roots(roots: np.ndarray, values: np.ndarray) -> np.ndarray:
        # floating sqrt can land one off; the root t must satisfy t(t+1)/2 <= value < (t+1)(t+2)/2
        roots = np.where(roots * (roots + 1) // 2 > values, roots - 1, roots)
        roots = np.where((roots + 1) * (roots + 2) // 2 <= values, roots + 1, roots)
        return roots

    def _row(self, operator: str, layer: str, value: float, split: str, classifier: str) -> EvalRow:
        return EvalRow(
            method=self.config.method,
            operator=operator,
            metric="precision_at_k",
            value=value,
            seed=self.config.split.rng_seed,
            split=split,
            layer=layer,
            classifier=classifier,
        )

