import numpy as np
from scipy.stats import rankdata

from plexembed.errors import PlexEmbedError


class MetricError(PlexEmbedError):
    pass


class Metrics:
    @staticmethod
    def roc_auc(scores: np.ndarray, labels: np.ndarray) -> float:
        """Mann-Whitney statistic with average ranks for ties."""
        scores, labels = np.asarray(scores, dtype=np.float64), np.asarray(labels)
        if len(scores) != len(labels):
            raise MetricError(f"{len(scores)} scores but {len(labels)} labels")

        positives = labels == 1
        positive_count = int(positives.sum())
        negative_count = len(labels) - positive_count
        if positive_count == 0 or negative_count == 0:
            raise MetricError("ROC-AUC needs both positive and negative labels")

        ranks = rankdata(scores, method="average")
        rank_sum = ranks[positives].sum() - positive_count * (positive_count + 1) / 2
        return float(rank_sum / (positive_count * negative_count))

    @staticmethod
    def precision_at_k(scores: np.ndarray, labels: np.ndarray, k: int) -> float:
        """Share of true labels among the k best scores; equal scores keep input order."""
        scores, labels = np.asarray(scores, dtype=np.float64), np.asarray(labels)
        if k <= 0:
            raise MetricError(f"K must be positive, got {k}")
        if k > len(scores):
            raise MetricError(f"K ({k}) exceeds the number of scored pairs ({len(scores)})")

        order = np.argsort(-scores, kind="stable")
        return float(labels[order[:k]].sum() / k)
