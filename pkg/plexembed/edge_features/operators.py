import numpy as np

from plexembed.edge_features.operator_kind import OperatorKind
from plexembed.errors import PlexEmbedError


class OperatorError(PlexEmbedError):
    pass


class EdgeOperators:
    """
    Componentwise edge features from two node vectors. `average` is the plain
    sum of the two vectors unless `halved_average` is set.
    """

    @staticmethod
    def apply(kind: OperatorKind, f_u: np.ndarray, f_v: np.ndarray, halved_average: bool = False) -> np.ndarray:
        f_u, f_v = np.asarray(f_u, dtype=np.float64), np.asarray(f_v, dtype=np.float64)
        if f_u.shape != f_v.shape:
            raise OperatorError(f"Dimension mismatch: {f_u.shape} vs {f_v.shape}")
        return EdgeOperators.apply_rows(kind, f_u[None, :], f_v[None, :], halved_average)[0]

    @staticmethod
    def apply_rows(
        kind: OperatorKind, left: np.ndarray, right: np.ndarray, halved_average: bool = False
    ) -> np.ndarray:
        """Row-wise version over (pairs, d) matrices."""
        if left.shape != right.shape:
            raise OperatorError(f"Dimension mismatch: {left.shape} vs {right.shape}")

        if kind == OperatorKind.HADAMARD:
            return left * right / 2
        if kind == OperatorKind.AVERAGE:
            total = left + right
            return total / 2 if halved_average else total
        if kind == OperatorKind.WEIGHTED_L1:
            return np.abs(left - right)
        if kind == OperatorKind.WEIGHTED_L2:
            return np.abs(left - right) ** 2
        if kind == OperatorKind.COSINE:
            left_norms = np.sqrt(np.sum(left * left, axis=1))
            right_norms = np.sqrt(np.sum(right * right, axis=1))
            if np.any(left_norms == 0) or np.any(right_norms == 0):
                raise OperatorError("Cosine operator is undefined for zero vectors")
            return left * right / (left_norms * right_norms)[:, None]

        raise OperatorError(f"Operator {kind} is not supported")

    @staticmethod
    def pair_features(
        kind: OperatorKind, W: np.ndarray, pairs: np.ndarray, halved_average: bool = False
    ) -> np.ndarray:
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        return EdgeOperators.apply_rows(kind, W[pairs[:, 0]], W[pairs[:, 1]], halved_average)
