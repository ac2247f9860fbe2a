from dataclasses import dataclass
from enum import Enum


class SplitScope(Enum):
    PER_LAYER = "per_layer"
    BIPARTITE_ONLY = "bipartite_only"


@dataclass(frozen=True)
class SplitConfig:
    test_fraction: float = 0.3
    rng_seed: int = 0
    scope: SplitScope = SplitScope.PER_LAYER

    def __post_init__(self):
        if not 0 < self.test_fraction < 1:
            raise ValueError(f"test_fraction must be in (0, 1), got {self.test_fraction}")

    def describe(self) -> str:
        return f"test_fraction={self.test_fraction};scope={self.scope.value}"
