import math
from typing import List, Optional

import numpy as np
from scipy.special import expit

from plexembed.embedding.samplers import NegativeSampler
from plexembed.embedding.truncated_row import TruncatedRow
from plexembed.errors import PlexEmbedError


class NonFiniteEmbedding(PlexEmbedError):
    pass


class NceUpdater:
    @staticmethod
    def update(W: np.ndarray, u: int, v: int, label: int, bias: float, lr: float) -> float:
        """
        g = (label - sigmoid(w_u . w_v - bias)) * lr, then w_u += g w_v and
        w_v += g w_u, both from the pre-update vectors. Returns g.
        """
        if u == v:
            return 0.0

        w_u, w_v = W[u], W[v]
        dot = float(w_u @ w_v)
        if not math.isfinite(dot):
            raise NonFiniteEmbedding(f"Non-finite dot product between rows {u} and {v}")

        g = (label - expit(dot - bias)) * lr
        previous_u = w_u.copy()
        w_u += g * w_v
        w_v += g * previous_u
        return g


class NceLoss:
    @staticmethod
    def estimate(
        W: np.ndarray,
        rows: List[Optional[TruncatedRow]],
        sample_size: int,
        rng: np.random.Generator,
        s: int = 5,
        bias_pos: float = 0.0,
        bias_neg: float = 0.0,
    ) -> float:
        """
        Monte-Carlo estimate of the NCE negative log-likelihood, averaged over
        every sampled (pair, label) event. Rows that are None are never sources.
        """
        if sample_size < 1:
            raise ValueError(f"sample_size must be at least 1, got {sample_size}")

        sources = np.array([u for u, row in enumerate(rows) if row is not None])
        if len(sources) == 0:
            raise ValueError("No similarity row to sample from")

        us = sources[rng.integers(len(sources), size=sample_size)]
        positives = np.array([rows[u].draw(value) for u, value in zip(us.tolist(), rng.random(sample_size))])
        negatives = NegativeSampler.sample_batch(us, len(rows), s, rng)

        positive_logits = np.einsum("ij,ij->i", W[us], W[positives]) - bias_pos
        negative_logits = np.einsum("ij,ikj->ik", W[us], W[negatives]) - bias_neg

        # -log sigmoid(x) = log(1 + exp(-x))
        positive_terms = np.logaddexp(0.0, -positive_logits)
        negative_terms = np.logaddexp(0.0, negative_logits)
        return float(np.concatenate([positive_terms, negative_terms.ravel()]).mean())
