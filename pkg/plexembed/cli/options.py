from dataclasses import dataclass
from typing import Any, Callable, Optional, Tuple

from plexembed.edge_features import OperatorKind


def parse_weights(text: str) -> Tuple[float, ...]:
    """Comma-separated layer weights, e.g. "0.5,0.25,0.25"."""
    try:
        return tuple(float(value) for value in text.split(",") if value.strip())
    except ValueError:
        raise ValueError(f'"{text}" is not a comma-separated list of numbers')


def parse_bool(text: str) -> bool:
    lowered = str(text).strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f'"{text}" is not a boolean')


@dataclass(frozen=True)
class Option:
    """A tunable shared by the command line and the config file."""

    name: str
    kind: Callable[[str], Any]
    default: Any
    help: str
    metavar: Optional[str] = None

    @property
    def flag(self) -> str:
        return f"--{self.name}"

    @property
    def dest(self) -> str:
        return self.name.replace("-", "_")


RWR_OPTIONS = (
    Option("restart", float, 0.7, "restart probability r of the walk"),
    Option("delta", float, 0.5, "probability of jumping between layers of a multiplex"),
    Option("tau", parse_weights, None, "restart weight per layer of the first multiplex", "W1,W2,..."),
    Option("tau-second", parse_weights, None, "restart weight per layer of the second multiplex", "W1,W2,..."),
    Option("lam", float, 0.5, "probability of crossing a bipartite edge"),
    Option("eta", float, 0.5, "restart mass on first-multiplex seeds for multi-seed walks"),
    Option("tol", float, 1e-10, "L1 convergence tolerance of the power iteration"),
    Option("max-iter", int, 1000, "iteration cap of the power iteration"),
)

TRAIN_OPTIONS = (
    Option("dim", int, 128, "embedding dimension d"),
    Option("n-max", int, None, "similarity entries kept per node (default: 300 above 5000 nodes, else 15%%)"),
    Option("negatives", int, 5, "negative samples per positive"),
    Option("lr", float, 0.025, "learning rate"),
    Option("steps", int, None, "total positive updates (default: 100 per node)"),
    Option("workers", int, 4, "parallel workers for the walks and the trainer lanes"),
    Option("bias-n", float, None, "N of the NCE bias terms (default: node count)"),
)

EVAL_OPTIONS = (
    Option("test-fraction", float, 0.3, "fraction of edges held out"),
    Option("subset-fraction", float, 0.95, "fraction of node pairs kept for network reconstruction"),
    Option("classifier", str, "logistic", "edge classifier: logistic or forest"),
    Option("classifier-epochs", int, 1000, "iteration cap of the logistic classifier"),
    Option("regularization", float, 1.0, "L2 regularization strength of the logistic classifier"),
    Option("halved-average", parse_bool, False, "halve the average operator"),
)

CLUSTER_OPTIONS = (
    Option("clusters", int, 500, "number of clusters k"),
    Option("kmeans-iter", int, 100, "iteration cap of spherical k-means"),
    Option("restarts", int, 5, "independent k-means runs, the best one is kept"),
)

PREDICT_OPTIONS = (
    Option("top-k", int, 5, "number of recommended partners"),
    Option("operator", OperatorKind, OperatorKind.HADAMARD, "edge operator used by the classifier"),
)

COMMON_OPTIONS = (
    Option("seed", int, 0, "global seed, every stage seed derives from it"),
    Option("log-level", str, "INFO", "logging level"),
)

ALL_OPTIONS = RWR_OPTIONS + TRAIN_OPTIONS + EVAL_OPTIONS + CLUSTER_OPTIONS + PREDICT_OPTIONS + COMMON_OPTIONS

OPTIONS_BY_DEST = {option.dest: option for option in ALL_OPTIONS}
