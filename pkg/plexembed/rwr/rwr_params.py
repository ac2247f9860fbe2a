from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class RwrParams:
    """
    Parameters of the random walk with restart on multiplex and
    multiplex-heterogeneous graphs.

    Args:
        r: restart probability, in (0, 1)
        delta: probability of jumping to a counterpart node on another layer
        tau: restart weight of each layer of the first multiplex, uniform when None
        lam: probability of crossing a bipartite edge (multiplex-heterogeneous only)
        eta: share of the restart mass on the first multiplex when seeds lie on both sides
        tau_second: restart weights of the second multiplex layers, uniform when None
        tol: L1 convergence threshold of the power iteration
        max_iter: iteration budget
    """

    r: float = 0.7
    delta: float = 0.5
    tau: Optional[Tuple[float, ...]] = None
    lam: float = 0.5
    eta: float = 0.5
    tau_second: Optional[Tuple[float, ...]] = None
    tol: float = 1e-10
    max_iter: int = 1000

    def __post_init__(self):
        if not 0 < self.r < 1:
            raise ValueError(f"Restart probability r must be in (0, 1), got {self.r}")
        for name in ("delta", "lam", "eta"):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.tol <= 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be positive, got {self.max_iter}")
        for name in ("tau", "tau_second"):
            weights = getattr(self, name)
            if weights is not None:
                self._check_tau(name, weights)

    @staticmethod
    def _check_tau(name: str, weights: Tuple[float, ...]) -> None:
        weights = np.asarray(weights, dtype=np.float64)
        if np.any(weights < 0):
            raise ValueError(f"{name} weights must be non-negative")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise ValueError(f"{name} weights must sum to 1, got {weights.sum()!r}")

    def resolve_tau(self, layer_count: int, second: bool = False) -> np.ndarray:
        weights = self.tau_second if second else self.tau
        if weights is None:
            return np.full(layer_count, 1.0 / layer_count)
        if len(weights) != layer_count:
            raise ValueError(f"Expected {layer_count} layer restart weights, got {len(weights)}")
        return np.asarray(weights, dtype=np.float64)
