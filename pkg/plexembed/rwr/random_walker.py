from typing import Optional, Sequence

import numpy as np

from plexembed.errors import PlexEmbedError
from plexembed.rwr.rwr_params import RwrParams
from plexembed.rwr.supra_transition import SupraTransition


class RwrNotConverged(PlexEmbedError):
    def __init__(self, seed: Optional[int], residual: float, iterations: int):
        super().__init__(
            f"Random walk from seed {seed} did not converge after {iterations} iterations (residual {residual:.3e})"
        )
        self.seed = seed
        self.residual = residual
        self.iterations = iterations


class RandomWalker:
    @staticmethod
    def restart_vector(transition: SupraTransition, seed: int) -> np.ndarray:
        """tau_a on the seed's instance in every layer of its own multiplex."""
        block, local_id = transition.block_of(seed)
        restart = np.zeros(transition.size)
        restart[block.supra_ids(local_id)] = block.tau
        return restart

    @staticmethod
    def restart_vector_multi(
        transition: SupraTransition,
        seeds_first: Sequence[int],
        seeds_second: Sequence[int] = (),
        eta: float = 0.5,
    ) -> np.ndarray:
        """
        Restart over a seed set. With seeds on both multiplexes, eta of the mass
        goes to the first one; seeds share their side's mass uniformly.
        Seeds are global node ids.
        """
        if not seeds_first and not seeds_second:
            raise ValueError("At least one seed is required")

        if seeds_first and seeds_second:
            shares = (eta, 1.0 - eta)
        else:
            shares = (1.0, 0.0) if seeds_first else (0.0, 1.0)

        restart = np.zeros(transition.size)
        for seeds, share in zip((seeds_first, seeds_second), shares):
            for seed in seeds:
                restart += share / len(seeds) * RandomWalker.restart_vector(transition, seed)
        return restart

    @staticmethod
    def rwr(seed: int, transition: SupraTransition, params: RwrParams) -> np.ndarray:
        restart = RandomWalker.restart_vector(transition, seed)
        return RandomWalker.iterate(restart[:, None], transition, params, seeds=[seed])[:, 0]

    @staticmethod
    def rwr_multi(restart: np.ndarray, transition: SupraTransition, params: RwrParams) -> np.ndarray:
        return RandomWalker.iterate(restart[:, None], transition, params)[:, 0]

    @staticmethod
    def iterate(
        restarts: np.ndarray,
        transition: SupraTransition,
        params: RwrParams,
        seeds: Optional[Sequence[int]] = None,
    ) -> np.ndarray:
        """
        Power iteration p <- (1 - r) T p + r p0 on every column of `restarts`
        at once, until each column moves less than `tol` in L1.
        """
        matrix, r = transition.matrix, params.r
        current = restarts.copy()
        residuals = np.full(restarts.shape[1], np.inf)

        for _ in range(params.max_iter):
            following = (1.0 - r) * (matrix @ current) + r * restarts
            residuals = np.abs(following - current).sum(axis=0)
            current = following
            if np.all(residuals < params.tol):
                return current

        worst = int(np.argmax(residuals))
        seed = seeds[worst] if seeds is not None else None
        raise RwrNotConverged(seed, float(residuals[worst]), params.max_iter)

    @staticmethod
    def aggregate_layers(supra_vector: np.ndarray, n: int, layer_count: int) -> np.ndarray:
        """Sum the mass of every node over its layer instances."""
        return np.asarray(supra_vector).reshape(layer_count, n, *np.shape(supra_vector)[1:]).sum(axis=0)

    @staticmethod
    def aggregate(transition: SupraTransition, supra_vectors: np.ndarray) -> np.ndarray:
        """Layer aggregation of every block, stacked in node-id order."""
        return np.concatenate(
            [
                RandomWalker.aggregate_layers(
                    supra_vectors[block.offset : block.offset + block.size], block.n, block.layer_count
                )
                for block in transition.blocks
            ],
            axis=0,
        )
