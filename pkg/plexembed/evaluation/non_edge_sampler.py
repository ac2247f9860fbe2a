from typing import Iterable, Optional, Set

import numpy as np

from plexembed.errors import PlexEmbedError
from plexembed.graph import MultiHetGraph, MultiplexGraph


class NonEdgeSamplingError(PlexEmbedError):
    pass


class PairSpace:
    """
    The pairs a sampler draws from and the pairs that count as edges.

    Multiplex spaces draw unordered pairs u != v over n nodes; bipartite spaces
    draw (left, right) pairs. Pairs are encoded as `u * width + v`.
    """

    def __init__(self, n_left: int, n_right: int, present: Set[int], bipartite: bool):
        self.n_left = n_left
        self.n_right = n_right
        self.present = present
        self.bipartite = bipartite

    @property
    def width(self) -> int:
        return self.n_right

    @staticmethod
    def multiplex(graph: MultiplexGraph) -> "PairSpace":
        present: Set[int] = set()
        for layer in graph.layers:
            sources, targets, _ = layer.edges()
            present.update((sources * graph.n + targets).tolist())
        return PairSpace(graph.n, graph.n, present, bipartite=False)

    @staticmethod
    def bipartite_of(graph: MultiHetGraph) -> "PairSpace":
        bipartite = graph.bipartite
        present = set((bipartite.left * graph.m + bipartite.right).tolist())
        return PairSpace(graph.n, graph.m, present, bipartite=True)

    def encode(self, pairs: np.ndarray) -> np.ndarray:
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if self.bipartite:
            return pairs[:, 0] * self.width + pairs[:, 1]
        return np.minimum(pairs[:, 0], pairs[:, 1]) * self.width + np.maximum(pairs[:, 0], pairs[:, 1])

    def decode(self, codes: Iterable[int]) -> np.ndarray:
        codes = np.fromiter(codes, dtype=np.int64)
        return np.column_stack([codes // self.width, codes % self.width]).reshape(-1, 2)

    def contains(self, u: int, v: int) -> bool:
        return int(self.encode(np.array([[u, v]]))[0]) in self.present


class NonEdgeSampler:
    ATTEMPTS_PER_PAIR = 1000

    @staticmethod
    def sample(
        space: PairSpace, count: int, rng: np.random.Generator, exclude: Optional[Set[int]] = None
    ) -> np.ndarray:
        """
        Uniform rejection sampling of distinct pairs absent from the space and
        from `exclude` (pair codes). Gives up after 1000 attempts per pair.
        """
        exclude = exclude or set()
        chosen = {}
        attempts, budget = 0, NonEdgeSampler.ATTEMPTS_PER_PAIR * max(count, 1)
        batch = max(64, 2 * count)

        while len(chosen) < count:
            if attempts >= budget:
                raise NonEdgeSamplingError(
                    f"Found only {len(chosen)} of {count} non-edges after {attempts} attempts, the graph is too dense"
                )
            lefts = rng.integers(space.n_left, size=batch)
            rights = rng.integers(space.n_right, size=batch)
            for u, v in zip(lefts.tolist(), rights.tolist()):
                attempts += 1
                if not space.bipartite:
                    if u == v:
                        continue
                    u, v = min(u, v), max(u, v)
                code = u * space.width + v
                if code in space.present or code in exclude or code in chosen:
                    continue
                chosen[code] = None
                if len(chosen) == count or attempts >= budget:
                    break

        return space.decode(chosen.keys())
