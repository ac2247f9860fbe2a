from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from plexembed.errors import PlexEmbedError


class TruncationError(PlexEmbedError):
    pass


@dataclass(frozen=True)
class TruncatedRow:
    indices: np.ndarray
    probs: np.ndarray
    cumulative: np.ndarray

    def __len__(self) -> int:
        return len(self.indices)

    def draw(self, uniform: float) -> int:
        """Map a uniform draw in [0, 1) to a node id by binary search on the cumulative sums."""
        position = int(np.searchsorted(self.cumulative, uniform * self.cumulative[-1], side="right"))
        return int(self.indices[min(position, len(self.indices) - 1)])


class RowTruncator:
    @staticmethod
    def truncate_normalize(
        row: Union[np.ndarray, Tuple[np.ndarray, np.ndarray]],
        n_max: int,
        exclude: Optional[int] = None,
    ) -> TruncatedRow:
        """
        Keep the n_max largest probabilities of a similarity row (ties go to the
        smaller node id) and renormalize them to sum to 1. `exclude` removes the
        row's own node before truncating.
        """
        if n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {n_max}")

        indices, probs = RowTruncator._as_sparse(row)
        keep = probs > 0
        if exclude is not None:
            keep &= indices != exclude
        indices, probs = indices[keep], probs[keep]

        if len(indices) == 0:
            raise TruncationError(f"Similarity row {exclude if exclude is not None else ''} has no mass to sample from")

        order = np.lexsort((indices, -probs))[:n_max]
        indices, probs = indices[order], probs[order]
        probs = probs / probs.sum()
        return TruncatedRow(indices=indices, probs=probs, cumulative=np.cumsum(probs))

    @staticmethod
    def _as_sparse(row) -> Tuple[np.ndarray, np.ndarray]:
        if isinstance(row, tuple):
            indices, probs = row
            return np.asarray(indices, dtype=np.int64), np.asarray(probs, dtype=np.float64)
        dense = np.asarray(row, dtype=np.float64)
        indices = np.flatnonzero(dense)
        return indices, dense[indices]
