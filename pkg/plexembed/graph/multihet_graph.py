from typing import Iterable, List, Set, Tuple

import numpy as np
from scipy import sparse

from plexembed.graph.multiplex_graph import MultiplexGraph
from plexembed.graph.node_index import NodeIndex


class BipartiteEdges:
    """Edges between the first multiplex (left ids) and the second one (right ids)."""

    left: np.ndarray
    right: np.ndarray
    dropped: int

    def __init__(self, pairs: Iterable[Tuple[int, int]], n_left: int, n_right: int, dropped: int = 0):
        unique_pairs = sorted(set((int(u), int(v)) for u, v in pairs))
        self.left = np.array([u for u, _ in unique_pairs], dtype=np.int64)
        self.right = np.array([v for _, v in unique_pairs], dtype=np.int64)
        self.n_left = n_left
        self.n_right = n_right
        self.dropped = dropped

        if len(unique_pairs) and (self.left.max() >= n_left or self.right.max() >= n_right):
            raise ValueError("Bipartite endpoint outside of its node index")
        if len(unique_pairs) and (self.left.min() < 0 or self.right.min() < 0):
            raise ValueError("Bipartite endpoint outside of its node index")

    @property
    def count(self) -> int:
        return len(self.left)

    @property
    def pairs(self) -> Set[Tuple[int, int]]:
        return set(zip(self.left.tolist(), self.right.tolist()))

    def matrix(self) -> sparse.csr_matrix:
        """n_left x n_right 0/1 incidence of the bipartite graph."""
        data = np.ones(self.count)
        return sparse.csr_matrix((data, (self.left, self.right)), shape=(self.n_left, self.n_right))

    def subset(self, positions: np.ndarray) -> "BipartiteEdges":
        return BipartiteEdges(
            zip(self.left[positions].tolist(), self.right[positions].tolist()), self.n_left, self.n_right
        )

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return self.count


class MultiHetGraph:
    """
    Two multiplex graphs joined by one logical bipartite edge set.

    Embedding-level node ids put the first multiplex at [0, n) and the second
    one at [n, n + m).
    """

    FIRST_TYPE = "first"
    SECOND_TYPE = "second"

    mplex1: MultiplexGraph
    mplex2: MultiplexGraph
    bipartite: BipartiteEdges

    def __init__(self, mplex1: MultiplexGraph, mplex2: MultiplexGraph, bipartite: BipartiteEdges):
        if bipartite.n_left != mplex1.n or bipartite.n_right != mplex2.n:
            raise ValueError("Bipartite edges do not match the multiplex node indexes")

        self.mplex1 = mplex1
        self.mplex2 = mplex2
        self.bipartite = bipartite

    @property
    def n(self) -> int:
        return self.mplex1.n

    @property
    def m(self) -> int:
        return self.mplex2.n

    @property
    def n_total(self) -> int:
        return self.n + self.m

    @property
    def labels(self) -> List[str]:
        return self.mplex1.nodes.labels + self.mplex2.nodes.labels

    @property
    def node_types(self) -> List[str]:
        return [self.FIRST_TYPE] * self.n + [self.SECOND_TYPE] * self.m

    def combined_index(self) -> NodeIndex:
        """Label index over both multiplexes; labels are disjoint between the two."""
        return NodeIndex(self.labels)

    def global_id(self, local_id: int, second: bool) -> int:
        return local_id + self.n if second else local_id

    def with_bipartite(self, bipartite: BipartiteEdges) -> "MultiHetGraph":
        return MultiHetGraph(self.mplex1, self.mplex2, bipartite)

    def __str__(self) -> str:
        return f"MultiHetGraph({self.mplex1}, {self.mplex2}, bipartite={self.bipartite.count})"
