import numpy as np

from plexembed.embedding.truncated_row import TruncatedRow


class PositiveSampler:
    @staticmethod
    def sample(row: TruncatedRow, rng: np.random.Generator) -> int:
        return row.draw(rng.random())


class NegativeSampler:
    """Uniform noise distribution over every node except the source."""

    @staticmethod
    def sample(u: int, n: int, rng: np.random.Generator) -> int:
        if n < 2:
            raise ValueError("Negative sampling needs at least two nodes")
        v = int(rng.integers(n - 1))
        return v + 1 if v >= u else v

    @staticmethod
    def sample_batch(sources: np.ndarray, n: int, s: int, rng: np.random.Generator) -> np.ndarray:
        """s negatives for every source, shape (len(sources), s)."""
        if n < 2:
            raise ValueError("Negative sampling needs at least two nodes")
        negatives = rng.integers(n - 1, size=(len(sources), s))
        return negatives + (negatives >= sources[:, None])
