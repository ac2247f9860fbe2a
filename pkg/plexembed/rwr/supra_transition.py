from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import sparse

from plexembed.graph import ColumnNormalizer, MultiHetGraph, MultiplexGraph
from plexembed.rwr.rwr_params import RwrParams


@dataclass(frozen=True)
class SupraBlock:
    """The (node, layer) instances of one multiplex inside a supra operator."""

    offset: int
    node_offset: int
    n: int
    layer_count: int
    tau: np.ndarray

    @property
    def size(self) -> int:
        return self.n * self.layer_count

    def supra_ids(self, local_id: int) -> np.ndarray:
        return self.offset + np.arange(self.layer_count) * self.n + local_id


@dataclass(frozen=True)
class SupraTransition:
    """
    Column-stochastic operator over supra nodes. Within a block, the instance
    of node i on layer a sits at `offset + a * n + i`.
    """

    matrix: sparse.csr_matrix
    blocks: Tuple[SupraBlock, ...]

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def node_count(self) -> int:
        return sum(block.n for block in self.blocks)

    def block_of(self, node_id: int) -> Tuple[SupraBlock, int]:
        for block in self.blocks:
            if block.node_offset <= node_id < block.node_offset + block.n:
                return block, node_id - block.node_offset
        raise IndexError(f"Node id {node_id} outside of [0, {self.node_count})")

    def column_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=0)).ravel()


class SupraTransitionBuilder:
    @staticmethod
    def build_multiplex(graph: MultiplexGraph, params: RwrParams) -> SupraTransition:
        matrix = SupraTransitionBuilder._intra_multiplex(graph, params.delta)
        block = SupraBlock(0, 0, graph.n, graph.layer_count, params.resolve_tau(graph.layer_count))
        return SupraTransition(matrix=sparse.csr_matrix(matrix), blocks=(block,))

    @staticmethod
    def build_multihet(graph: MultiHetGraph, params: RwrParams) -> SupraTransition:
        """
        A supra node with bipartite neighbours crosses with probability lam,
        uniformly over those neighbours and then over the destination layers;
        otherwise it moves as in its own multiplex.
        """
        n, layers1 = graph.n, graph.mplex1.layer_count
        m, layers2 = graph.m, graph.mplex2.layer_count
        lam = params.lam

        intra1 = SupraTransitionBuilder._intra_multiplex(graph.mplex1, params.delta)
        intra2 = SupraTransitionBuilder._intra_multiplex(graph.mplex2, params.delta)

        incidence = graph.bipartite.matrix()
        left_degrees = np.asarray(incidence.sum(axis=1)).ravel()
        right_degrees = np.asarray(incidence.sum(axis=0)).ravel()

        # cross blocks: rows are destinations, columns are sources
        to_second = incidence.T @ sparse.diags(SupraTransitionBuilder._safe_inverse(left_degrees))
        to_first = incidence @ sparse.diags(SupraTransitionBuilder._safe_inverse(right_degrees))
        cross21 = (lam / layers2) * sparse.kron(np.ones((layers2, layers1)), to_second)
        cross12 = (lam / layers1) * sparse.kron(np.ones((layers1, layers2)), to_first)

        stay1 = np.tile(np.where(left_degrees > 0, 1.0 - lam, 1.0), layers1)
        stay2 = np.tile(np.where(right_degrees > 0, 1.0 - lam, 1.0), layers2)

        matrix = sparse.bmat(
            [
                [intra1 @ sparse.diags(stay1), cross12],
                [cross21, intra2 @ sparse.diags(stay2)],
            ],
            format="csr",
        )
        matrix.eliminate_zeros()

        blocks = (
            SupraBlock(0, 0, n, layers1, params.resolve_tau(layers1)),
            SupraBlock(n * layers1, n, m, layers2, params.resolve_tau(layers2, second=True)),
        )
        return SupraTransition(matrix=matrix, blocks=blocks)

    @staticmethod
    def _intra_multiplex(graph: MultiplexGraph, delta: float) -> sparse.csr_matrix:
        n, layer_count = graph.n, graph.layer_count
        normalized = [ColumnNormalizer.normalize(layer) for layer in graph.layers]

        if layer_count == 1:
            only = normalized[0]
            return sparse.csr_matrix(only.matrix + sparse.diags(only.zero_degree_mask.astype(np.float64)))

        has_neighbors = np.vstack([~layer.zero_degree_mask for layer in normalized])
        isolated_everywhere = ~has_neighbors.any(axis=0)

        within = np.where(has_neighbors, 1.0 - delta, 0.0)
        across = np.where(has_neighbors, delta, 1.0)
        across[:, isolated_everywhere] = 0.0
        self_loops = np.tile(isolated_everywhere.astype(np.float64), layer_count)

        within_blocks = sparse.block_diag(
            [layer.matrix @ sparse.diags(within[alpha]) for alpha, layer in enumerate(normalized)]
        )
        counterpart_jumps = sparse.kron(
            (np.ones((layer_count, layer_count)) - np.eye(layer_count)) / (layer_count - 1),
            sparse.identity(n),
        )
        matrix = within_blocks + counterpart_jumps @ sparse.diags(across.ravel()) + sparse.diags(self_loops)
        return sparse.csr_matrix(matrix)

    @staticmethod
    def _safe_inverse(values: np.ndarray) -> np.ndarray:
        inverse = np.zeros_like(values, dtype=np.float64)
        np.divide(1.0, values, out=inverse, where=values > 0)
        return inverse

