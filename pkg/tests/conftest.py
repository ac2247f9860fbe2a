import itertools
from typing import List, Sequence, Tuple

import numpy as np
import pytest

from plexembed.graph import EdgeListParser, GraphFactory, MultiHetGraph, MultiplexGraph
from plexembed.rwr import RandomWalker, SupraTransition


def edges_text(pairs: Sequence[Tuple[str, str]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in pairs)


def multiplex_from_pairs(*layers: Sequence[Tuple[str, str]]) -> MultiplexGraph:
    return GraphFactory.build_multiplex([EdgeListParser.parse(edges_text(pairs)).edges for pairs in layers])


def clique(labels: Sequence[str]) -> List[Tuple[str, str]]:
    return list(itertools.combinations(labels, 2))


def two_cliques(size: int, bridges: int = 1, prefix: str = "") -> Tuple[List[Tuple[str, str]], List[str], List[str]]:
    left = [f"{prefix}l{i}" for i in range(size)]
    right = [f"{prefix}r{i}" for i in range(size)]
    pairs = clique(left) + clique(right) + [(left[i], right[i]) for i in range(bridges)]
    return pairs, left, right


def random_multiplex(rng: np.random.Generator, max_nodes: int = 20, max_layers: int = 3) -> MultiplexGraph:
    n = int(rng.integers(3, max_nodes + 1))
    labels = [f"v{i}" for i in range(n)]
    layers = []
    for _ in range(int(rng.integers(1, max_layers + 1))):
        density = rng.uniform(0.1, 0.5)
        pairs = [(labels[u], labels[v]) for u, v in itertools.combinations(range(n), 2) if rng.random() < density]
        layers.append(pairs or [(labels[0], labels[1])])
    # keep every label present so the node set is the full range
    layers[0] = layers[0] + [(labels[i], labels[i + 1]) for i in range(n - 1)]
    return multiplex_from_pairs(*layers)


def dense_rwr_solution(transition: SupraTransition, r: float, seed: int) -> np.ndarray:
    """Steady state by direct solve of (I - (1 - r) T) p = r p0, aggregated over layers."""
    restart = RandomWalker.restart_vector(transition, seed)
    dense = transition.matrix.toarray()
    steady = np.linalg.solve(np.eye(transition.size) - (1 - r) * dense, r * restart)
    return RandomWalker.aggregate(transition, steady)


def planted_multihet(groups: int = 4, size: int = 5) -> MultiHetGraph:
    """
    Two multiplexes of `groups` cliques each; group g of the first multiplex is
    fully linked to group g of the second one.
    """
    first_layers, second_layers, bipartite = [[], []], [[], []], []
    for group in range(groups):
        genes = [f"g{group}_{i}" for i in range(size)]
        diseases = [f"d{group}_{i}" for i in range(size)]
        for layer in range(2):
            first_layers[layer] += clique(genes)
            second_layers[layer] += clique(diseases)
        bipartite += [(gene, disease) for gene in genes for disease in diseases]

    # one bridge per consecutive group pair keeps each multiplex connected
    for group in range(groups - 1):
        first_layers[0].append((f"g{group}_0", f"g{group + 1}_0"))
        second_layers[1].append((f"d{group}_0", f"d{group + 1}_0"))

    return GraphFactory.build_multihet(
        multiplex_from_pairs(*first_layers),
        multiplex_from_pairs(*second_layers),
        EdgeListParser.parse(edges_text(bipartite)).edges,
    )


@pytest.fixture
def path_graph() -> MultiplexGraph:
    return multiplex_from_pairs([("a", "b")])


@pytest.fixture
def toy_multiplex() -> MultiplexGraph:
    return multiplex_from_pairs(
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")],
        [("a", "b"), ("c", "e"), ("e", "f")],
    )


@pytest.fixture
def toy_multihet() -> MultiHetGraph:
    first = multiplex_from_pairs([("a", "b"), ("b", "c")], [("a", "c")])
    second = multiplex_from_pairs([("x", "y"), ("y", "z")])
    return GraphFactory.build_multihet(
        first, second, EdgeListParser.parse(edges_text([("a", "x"), ("b", "x"), ("c", "z")])).edges
    )


@pytest.fixture
def write_files(tmp_path):
    """Writes {relative path: text} under tmp_path and returns tmp_path."""

    def write(files: dict):
        for relative_path, text in files.items():
            path = tmp_path / relative_path
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        return tmp_path

    return write
