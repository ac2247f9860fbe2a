import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple, Union
import logging

import numpy as np
from scipy import sparse

from plexembed.graph import MultiHetGraph, MultiplexGraph, NodeIndex
from plexembed.logger import Logger
from plexembed.rwr.random_walker import RandomWalker
from plexembed.rwr.rwr_params import RwrParams
from plexembed.rwr.supra_transition import SupraTransition, SupraTransitionBuilder

logger = logging.getLogger(__name__)


class SimilarityMatrix:
    """Row-stochastic node-to-node proximity: row v is the layer-aggregated RWR steady state from v."""

    matrix: sparse.csr_matrix
    nodes: NodeIndex
    node_types: List[str]

    def __init__(self, matrix: sparse.spmatrix, nodes: NodeIndex, node_types: Optional[List[str]] = None):
        self.matrix = sparse.csr_matrix(matrix)
        self.nodes = nodes
        self.node_types = node_types or ["node"] * len(nodes)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def row(self, node_id: int) -> Tuple[np.ndarray, np.ndarray]:
        start, end = self.matrix.indptr[node_id], self.matrix.indptr[node_id + 1]
        return self.matrix.indices[start:end], self.matrix.data[start:end]

    def dense_row(self, node_id: int) -> np.ndarray:
        return self.matrix.getrow(node_id).toarray().ravel()

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel()

    def write(self, path: str) -> None:
        with open(path, "w") as file:
            for node_id in range(self.n):
                source = self.nodes.get_label(node_id)
                indices, probs = self.row(node_id)
                for neighbor, prob in zip(indices.tolist(), probs.tolist()):
                    file.write(f"{source} {self.nodes.get_label(neighbor)} {prob!r}\n")


class SimilarityCalculator:
    DEFAULT_CHUNK_SIZE = 256

    @staticmethod
    def build_transition(graph: Union[MultiplexGraph, MultiHetGraph], params: RwrParams) -> SupraTransition:
        if isinstance(graph, MultiHetGraph):
            return SupraTransitionBuilder.build_multihet(graph, params)
        return SupraTransitionBuilder.build_multiplex(graph, params)

    @staticmethod
    def similarity_matrix(
        graph: Union[MultiplexGraph, MultiHetGraph],
        params: RwrParams,
        workers: int = 1,
        chunk_size: int = DEFAULT_CHUNK_SIZE,
    ) -> SimilarityMatrix:
        """
        Run one walk per node as seed. Seeds are processed in independent chunks
        and gathered back in seed order, so the result does not depend on `workers`.
        """
        start_time = time.time()
        transition = SimilarityCalculator.build_transition(graph, params)
        node_count = transition.node_count
        chunks = [np.arange(start, min(start + chunk_size, node_count)) for start in range(0, node_count, chunk_size)]

        def run_chunk(position_and_seeds):
            position, seeds = position_and_seeds
            rows = SimilarityCalculator._rows_for_seeds(seeds, transition, params)
            Logger.log_progress(
                position, max(1, len(chunks) // 10), f"RWR chunk {position + 1}/{len(chunks)} ({len(seeds)} seeds)"
            )
            return rows

        if workers > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                row_blocks = list(executor.map(run_chunk, enumerate(chunks)))
        else:
            row_blocks = [run_chunk(item) for item in enumerate(chunks)]

        matrix = sparse.vstack(row_blocks, format="csr")
        logger.info(f"Execution time of similarity_matrix: {time.time() - start_time:.2f} seconds")

        if isinstance(graph, MultiHetGraph):
            return SimilarityMatrix(matrix, graph.combined_index(), graph.node_types)
        return SimilarityMatrix(matrix, graph.nodes)

    @staticmethod
    def seed_distribution(
        graph: Union[MultiplexGraph, MultiHetGraph], params: RwrParams, seed: int
    ) -> np.ndarray:
        transition = SimilarityCalculator.build_transition(graph, params)
        return RandomWalker.aggregate(transition, RandomWalker.rwr(seed, transition, params))

    @staticmethod
    def _rows_for_seeds(seeds: np.ndarray, transition: SupraTransition, params: RwrParams) -> sparse.csr_matrix:
        restarts = np.column_stack([RandomWalker.restart_vector(transition, int(seed)) for seed in seeds])
        steady = RandomWalker.iterate(restarts, transition, params, seeds=seeds.tolist())
        aggregated = RandomWalker.aggregate(transition, steady)
        return sparse.csr_matrix(aggregated.T)
