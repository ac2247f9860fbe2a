import math
from dataclasses import dataclass, replace
from typing import Optional


@dataclass(frozen=True)
class TrainParams:
    """
    Noise-contrastive training of the embedding matrix.

    `n_max` and `total_steps` are resolved against the node count by `resolved`:
    n_max defaults to 300 above 5000 nodes and to ceil(0.15 n) otherwise,
    total_steps to 100 n.
    """

    d: int = 128
    n_max: Optional[int] = None
    s: int = 5
    lr: float = 0.025
    total_steps: Optional[int] = None
    workers: int = 4
    rng_seed: int = 0
    bias_n: Optional[float] = None
    checkpoints: int = 20
    monitor_sample: int = 200
    max_norm: float = 1e3

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"Embedding dimension must be at least 1, got {self.d}")
        if self.s < 1:
            raise ValueError(f"Negatives per positive must be at least 1, got {self.s}")
        if self.lr <= 0:
            raise ValueError(f"Learning rate must be positive, got {self.lr}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {self.n_max}")
        if self.total_steps is not None and self.total_steps < 0:
            raise ValueError(f"total_steps must be non-negative, got {self.total_steps}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.bias_n is not None and self.bias_n <= 0:
            raise ValueError(f"bias_n must be positive, got {self.bias_n}")

    def resolved(self, n: int) -> "TrainParams":
        n_max = self.n_max
        if n_max is None:
            n_max = 300 if n > 5000 else max(1, math.ceil(0.15 * n))
        if n_max > n:
            raise ValueError(f"n_max ({n_max}) exceeds the node count ({n})")

        total_steps = 100 * n if self.total_steps is None else self.total_steps
        return replace(self, n_max=n_max, total_steps=total_steps)

    def bias_pos(self, n: int) -> float:
        return math.log(self.bias_n or n)

    def bias_neg(self, n: int) -> float:
        return math.log((self.bias_n or n) / self.s)
