from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LabeledEdgeSet:
    pairs: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        if len(self.pairs) != len(self.labels):
            raise ValueError(f"{len(self.pairs)} pairs but {len(self.labels)} labels")

    @staticmethod
    def from_positives_and_negatives(positives: np.ndarray, negatives: np.ndarray) -> "LabeledEdgeSet":
        positives = np.asarray(positives, dtype=np.int64).reshape(-1, 2)
        negatives = np.asarray(negatives, dtype=np.int64).reshape(-1, 2)
        return LabeledEdgeSet(
            pairs=np.vstack([positives, negatives]),
            labels=np.concatenate([np.ones(len(positives), dtype=np.int64), np.zeros(len(negatives), dtype=np.int64)]),
        )

    @property
    def positive_count(self) -> int:
        return int(self.labels.sum())

    def __len__(self) -> int:
        return len(self.labels)
