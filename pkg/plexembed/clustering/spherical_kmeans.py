from dataclasses import dataclass
from typing import Optional, Union
import logging

import numpy as np

from plexembed.embedding import EmbeddingMatrix
from plexembed.errors import PlexEmbedError

logger = logging.getLogger(__name__)


class ClusteringError(PlexEmbedError):
    pass


@dataclass(frozen=True)
class ClusteringParams:
    k: int = 500
    max_iter: int = 100
    rng_seed: int = 0
    restarts: int = 5

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.max_iter < 1 or self.restarts < 1:
            raise ValueError("max_iter and restarts must be positive")


@dataclass
class ClusterAssignment:
    labels: np.ndarray
    centroids: np.ndarray
    inertia: float
    iterations: int = 0
    objective_history: Optional[list] = None

    @property
    def k(self) -> int:
        return self.centroids.shape[0]

    def members(self, cluster: int) -> np.ndarray:
        return np.flatnonzero(self.labels == cluster)


class SphericalKMeans:
    """
    k-means on the unit sphere: points join the centroid of highest cosine and
    centroids are re-normalized means. The objective (`inertia`) is the total
    cosine between points and their centroids; higher is better.
    """

    def __init__(self, params: ClusteringParams = None):
        self.params = params or ClusteringParams()

    def fit(self, W: Union[np.ndarray, EmbeddingMatrix]) -> ClusterAssignment:
        points = self.normalize_rows(W.W if isinstance(W, EmbeddingMatrix) else np.asarray(W, dtype=np.float64))
        if self.params.k > len(points):
            raise ClusteringError(f"k ({self.params.k}) exceeds the number of points ({len(points)})")

        best: Optional[ClusterAssignment] = None
        for seed in np.random.SeedSequence(self.params.rng_seed).spawn(self.params.restarts):
            assignment = self._run(points, np.random.default_rng(seed))
            if best is None or assignment.inertia > best.inertia:
                best = assignment

        logger.info(f"Spherical k-means: k={self.params.k}, objective {best.inertia:.4f}")
        return best

    @staticmethod
    def normalize_rows(W: np.ndarray) -> np.ndarray:
        norms = np.linalg.norm(W, axis=1)
        if np.any(norms == 0):
            raise ClusteringError(f"Row {int(np.argmin(norms))} of the embedding is a zero vector")
        return W / norms[:, None]

    @staticmethod
    def assign(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
        return np.argmax(points @ centroids.T, axis=1)

    def _run(self, points: np.ndarray, rng: np.random.Generator) -> ClusterAssignment:
        centroids = self._seed_centroids(points, rng)
        labels = self.assign(points, centroids)
        history = []

        for iteration in range(1, self.params.max_iter + 1):
            centroids = self._update_centroids(points, labels, centroids)
            history.append(self._objective(points, labels, centroids))

            new_labels = self.assign(points, centroids)
            if np.array_equal(new_labels, labels):
                break
            labels = new_labels

        return ClusterAssignment(
            labels=labels,
            centroids=centroids,
            inertia=self._objective(points, labels, centroids),
            iterations=iteration,
            objective_history=history,
        )

    def _seed_centroids(self, points: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """k-means++ on cosine distance 1 - cos."""
        chosen = [int(rng.integers(len(points)))]
        distances = 1.0 - points @ points[chosen[0]]

        for _ in range(1, self.params.k):
            weights = np.clip(distances, 0.0, None)
            total = weights.sum()
            if total > 0:
                following = int(rng.choice(len(points), p=weights / total))
            else:
                remaining = np.setdiff1d(np.arange(len(points)), chosen)
                following = int(rng.choice(remaining))
            chosen.append(following)
            distances = np.minimum(distances, 1.0 - points @ points[following])

        return points[chosen].copy()

    @staticmethod
    def _update_centroids(points: np.ndarray, labels: np.ndarray, previous: np.ndarray) -> np.ndarray:
        k = previous.shape[0]
        sums = np.zeros_like(previous)
        np.add.at(sums, labels, points)
        norms = np.linalg.norm(sums, axis=1)

        centroids = previous.copy()
        filled = norms > 0
        centroids[filled] = sums[filled] / norms[filled, None]

        empty = np.flatnonzero(~filled)
        if len(empty):
            # reseed from the points that fit their own centroid worst
            fit = np.einsum("ij,ij->i", points, centroids[labels])
            for cluster, point in zip(empty.tolist(), np.argsort(fit, kind="stable")[: len(empty)].tolist()):
                centroids[cluster] = points[point]
            logger.debug(f"Reseeded {len(empty)} empty clusters out of {k}")

        return centroids

    @staticmethod
    def _objective(points: np.ndarray, labels: np.ndarray, centroids: np.ndarray) -> float:
        return float(np.einsum("ij,ij->", points, centroids[labels]))
