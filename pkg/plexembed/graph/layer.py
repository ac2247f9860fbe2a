from typing import Optional, Tuple

import numpy as np
from scipy import sparse


class Layer:
    """
    One undirected edge type over the shared node set of a multiplex.

    The adjacency is stored as a symmetric CSR matrix with an empty diagonal.
    """

    adjacency: sparse.csr_matrix
    name: str

    def __init__(self, adjacency: sparse.spmatrix, name: str = ""):
        adjacency = sparse.csr_matrix(adjacency, dtype=np.float64)
        if adjacency.shape[0] != adjacency.shape[1]:
            raise ValueError(f"Layer adjacency must be square, got {adjacency.shape}")

        adjacency = sparse.csr_matrix(adjacency - sparse.diags(adjacency.diagonal()))
        adjacency.eliminate_zeros()
        adjacency.sort_indices()

        if (adjacency != adjacency.T).nnz:
            raise ValueError("Layer adjacency must be symmetric")

        self.adjacency = adjacency
        self.name = name

    @staticmethod
    def from_pairs(
        n: int,
        sources: np.ndarray,
        targets: np.ndarray,
        weights: Optional[np.ndarray] = None,
        name: str = "",
    ) -> "Layer":
        sources = np.asarray(sources, dtype=np.int64)
        targets = np.asarray(targets, dtype=np.int64)
        weights = np.ones(len(sources)) if weights is None else np.asarray(weights, dtype=np.float64)

        rows = np.concatenate([sources, targets])
        cols = np.concatenate([targets, sources])
        data = np.concatenate([weights, weights])
        return Layer(sparse.coo_matrix((data, (rows, cols)), shape=(n, n)), name=name)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return self.adjacency.nnz // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.adjacency.indptr)

    @property
    def weighted_degrees(self) -> np.ndarray:
        return np.asarray(self.adjacency.sum(axis=0)).ravel()

    @property
    def is_weighted(self) -> bool:
        return bool(np.any(self.adjacency.data != 1.0))

    def neighbors(self, node_id: int) -> np.ndarray:
        start, end = self.adjacency.indptr[node_id], self.adjacency.indptr[node_id + 1]
        return self.adjacency.indices[start:end]

    def has_edge(self, u: int, v: int) -> bool:
        neighbors = self.neighbors(u)
        position = np.searchsorted(neighbors, v)
        return position < len(neighbors) and neighbors[position] == v

    def edges(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Each undirected edge once, as (u, v, weight) arrays with u < v."""
        upper = sparse.triu(self.adjacency, k=1, format="coo")
        order = np.lexsort((upper.col, upper.row))
        return upper.row[order], upper.col[order], upper.data[order]

    def with_edges(self, sources: np.ndarray, targets: np.ndarray, weights: Optional[np.ndarray] = None) -> "Layer":
        return Layer.from_pairs(self.n, sources, targets, weights, name=self.name)

    def __str__(self) -> str:
        return f"Layer({self.name or '?'}: n={self.n}, edges={self.edge_count})"
