import os
from typing import List, Optional

import numpy as np
from typing_extensions import Self

from plexembed.errors import PlexEmbedError
from plexembed.graph import NodeIndex


class EmbeddingFormatError(PlexEmbedError):
    pass


class EmbeddingMatrix:
    """n x d node vectors; row i belongs to node id i of `nodes`."""

    W: np.ndarray
    nodes: NodeIndex
    node_types: List[str]

    def __init__(self, W: np.ndarray, nodes: NodeIndex, node_types: Optional[List[str]] = None):
        if W.ndim != 2 or W.shape[0] != len(nodes):
            raise ValueError(f"Embedding shape {W.shape} does not match {len(nodes)} nodes")
        self.W = W
        self.nodes = nodes
        self.node_types = node_types or ["node"] * len(nodes)

    @staticmethod
    def initialize(n: int, d: int, rng_seed: int, nodes: Optional[NodeIndex] = None) -> "EmbeddingMatrix":
        """Independent standard-normal entries, reproducible for a fixed seed."""
        if n < 1 or d < 1:
            raise ValueError(f"Embedding needs n, d >= 1, got n={n}, d={d}")
        W = np.random.default_rng(rng_seed).standard_normal((n, d))
        nodes = nodes or NodeIndex(str(i) for i in range(n))
        return EmbeddingMatrix(W, nodes)

    @property
    def n(self) -> int:
        return self.W.shape[0]

    @property
    def d(self) -> int:
        return self.W.shape[1]

    def vector(self, label: str) -> np.ndarray:
        return self.W[self.nodes.get_id(label)]

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.W, axis=1)

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.W)))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.d}"]
        for node_id, row in enumerate(self.W.tolist()):
            lines.append(" ".join([self.nodes.get_label(node_id)] + [repr(value) for value in row]))
        return "\n".join(lines) + "\n"

    def write(self, path: str) -> None:
        with open(path, "w") as file:
            file.write(self.to_text())

    @classmethod
    def read(cls, path: str) -> Self:
        if not os.path.isfile(path):
            raise EmbeddingFormatError(f"Embedding file {path} does not exist")

        with open(path, "r") as file:
            header = file.readline().split()
            if len(header) != 2:
                raise EmbeddingFormatError(f"{path}: header must be 'n d'")
            n, d = int(header[0]), int(header[1])

            nodes = NodeIndex()
            W = np.zeros((n, d))
            for line_number, line in enumerate(file, start=2):
                fields = line.split()
                if not fields:
                    continue
                row = len(nodes)
                if row >= n or len(fields) != d + 1:
                    raise EmbeddingFormatError(f"{path}: line {line_number} does not hold a label and {d} values")
                if fields[0] in nodes:
                    raise EmbeddingFormatError(f"{path}: line {line_number} repeats label {fields[0]}")
                nodes.add(fields[0])
                W[row] = [float(value) for value in fields[1:]]

        if len(nodes) != n:
            raise EmbeddingFormatError(f"{path}: expected {n} rows, found {len(nodes)}")
        return cls(W, nodes)
