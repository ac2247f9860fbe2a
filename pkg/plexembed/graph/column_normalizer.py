from dataclasses import dataclass

import numpy as np
from scipy import sparse

from plexembed.graph.layer import Layer


@dataclass(frozen=True)
class ColumnStochastic:
    matrix: sparse.csc_matrix
    zero_degree: np.ndarray

    @property
    def zero_degree_mask(self) -> np.ndarray:
        mask = np.zeros(self.matrix.shape[1], dtype=bool)
        mask[self.zero_degree] = True
        return mask


class ColumnNormalizer:
    @staticmethod
    def normalize(layer: Layer) -> ColumnStochastic:
        """
        Divide every column of the adjacency by its (weighted) degree. Columns of
        isolated nodes stay empty and are reported in `zero_degree`.
        """
        degrees = layer.weighted_degrees
        zero_degree = np.flatnonzero(degrees == 0)

        inverse = np.zeros_like(degrees)
        np.divide(1.0, degrees, out=inverse, where=degrees > 0)

        matrix = sparse.csc_matrix(layer.adjacency @ sparse.diags(inverse))
        return ColumnStochastic(matrix=matrix, zero_degree=zero_degree)
