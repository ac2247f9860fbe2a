import argparse
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dotenv import dotenv_values

from plexembed.cli.options import ALL_OPTIONS, OPTIONS_BY_DEST
from plexembed.clustering import ClusteringParams
from plexembed.edge_features import OperatorKind
from plexembed.embedding import TrainParams
from plexembed.errors import ConfigError
from plexembed.evaluation import ClassifierHyper, PipelineConfig, SplitConfig, SplitScope
from plexembed.graph import MultiplexManifest
from plexembed.rwr import RwrParams

ENV_DEFAULTS = {
    "workers": "PLEXEMBED_WORKERS",
    "log_level": "PLEXEMBED_LOG_LEVEL",
}


@dataclass(frozen=True)
class StageSeeds:
    """Every stage seed is the global seed plus a fixed offset."""

    split: int
    train: int
    cluster: int
    classifier: int

    @staticmethod
    def derive(seed: int) -> "StageSeeds":
        return StageSeeds(split=seed, train=seed + 1, cluster=seed + 2, classifier=seed + 3)


@dataclass
class RunConfig:
    command: str
    output: str
    values: Dict[str, Any]
    rwr: RwrParams
    train: TrainParams
    split: SplitConfig
    classifier: ClassifierHyper
    clustering: ClusteringParams
    multiplex: Optional[str] = None
    second: Optional[str] = None
    bipartite: Optional[str] = None
    embedding: Optional[str] = None
    seed_node: Optional[str] = None
    query: Optional[str] = None
    similarity_out: Optional[str] = None
    config_file: Optional[str] = None
    layer_paths: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def seed(self) -> int:
        return self.values["seed"]

    @property
    def stage_seeds(self) -> StageSeeds:
        return StageSeeds.derive(self.seed)

    @property
    def is_multihet(self) -> bool:
        return self.second is not None

    @property
    def operator(self) -> OperatorKind:
        return self.values["operator"]

    def pipeline_config(self, scope: SplitScope = SplitScope.PER_LAYER) -> PipelineConfig:
        split = SplitConfig(test_fraction=self.split.test_fraction, rng_seed=self.split.rng_seed, scope=scope)
        return PipelineConfig(
            rwr=self.rwr,
            train=self.train,
            split=split,
            classifier=self.classifier,
            halved_average=self.values["halved_average"],
        )

    def input_paths(self) -> List[str]:
        """Every file the run reads, in a stable order."""
        paths = []
        for manifest in (self.multiplex, self.second):
            if manifest is not None:
                paths.append(manifest)
                paths.extend(self.layer_paths.get(manifest, []))
        for path in (self.bipartite, self.embedding, self.config_file):
            if path is not None:
                paths.append(path)
        return paths


class RunConfigBuilder:
    """
    Resolves every option from, in order of precedence: the command line, the
    `--config` file, PLEXEMBED_* environment variables, built-in defaults.
    """

    @staticmethod
    def build(namespace: argparse.Namespace) -> RunConfig:
        file_values = RunConfigBuilder.read_config_file(namespace.config) if namespace.config else {}
        values = RunConfigBuilder.resolve(namespace, file_values)
        seeds = StageSeeds.derive(values["seed"])

        try:
            rwr = RwrParams(
                r=values["restart"],
                delta=values["delta"],
                tau=values["tau"],
                tau_second=values["tau_second"],
                lam=values["lam"],
                eta=values["eta"],
                tol=values["tol"],
                max_iter=values["max_iter"],
            )
            train = TrainParams(
                d=values["dim"],
                n_max=values["n_max"],
                s=values["negatives"],
                lr=values["lr"],
                total_steps=values["steps"],
                workers=values["workers"],
                rng_seed=seeds.train,
                bias_n=values["bias_n"],
            )
            split = SplitConfig(test_fraction=values["test_fraction"], rng_seed=seeds.split)
            classifier = ClassifierHyper(
                kind=values["classifier"],
                epochs=values["classifier_epochs"],
                regularization=values["regularization"],
                rng_seed=seeds.classifier,
            )
            clustering = ClusteringParams(
                k=values["clusters"],
                max_iter=values["kmeans_iter"],
                rng_seed=seeds.cluster,
                restarts=values["restarts"],
            )
            if not 0 < values["subset_fraction"] <= 1:
                raise ValueError(f"subset-fraction must be in (0, 1], got {values['subset_fraction']}")
            if values["top_k"] < 1:
                raise ValueError(f"top-k must be positive, got {values['top_k']}")
        except ValueError as error:
            raise ConfigError(str(error)) from error

        config = RunConfig(
            command=namespace.command,
            output=namespace.output,
            values=values,
            rwr=rwr,
            train=train,
            split=split,
            classifier=classifier,
            clustering=clustering,
            multiplex=getattr(namespace, "multiplex", None),
            second=getattr(namespace, "second", None),
            bipartite=getattr(namespace, "bipartite", None),
            embedding=getattr(namespace, "embedding", None),
            seed_node=getattr(namespace, "seed_node", None),
            query=getattr(namespace, "query", None),
            similarity_out=getattr(namespace, "similarity_out", None),
            config_file=namespace.config,
        )
        RunConfigBuilder.check_inputs(config)
        return config

    @staticmethod
    def read_config_file(path: str) -> Dict[str, str]:
        if not os.path.isfile(path):
            raise ConfigError(f"Config file {path} does not exist")

        values = {}
        for key, value in dotenv_values(path).items():
            dest = key.strip().lower().lstrip("-").replace("-", "_")
            if dest not in OPTIONS_BY_DEST:
                raise ConfigError(f'{path}: unknown option "{key}"')
            if value is None:
                raise ConfigError(f'{path}: option "{key}" has no value')
            values[dest] = value
        return values

    @staticmethod
    def resolve(namespace: argparse.Namespace, file_values: Dict[str, str]) -> Dict[str, Any]:
        values = {}
        for option in ALL_OPTIONS:
            flag_value = getattr(namespace, option.dest, None)
            if flag_value is not None:
                values[option.dest] = flag_value
                continue

            text = file_values.get(option.dest)
            if text is None and option.dest in ENV_DEFAULTS:
                text = os.getenv(ENV_DEFAULTS[option.dest])
            if text is None:
                values[option.dest] = option.default
                continue

            try:
                values[option.dest] = option.kind(text)
            except ValueError as error:
                raise ConfigError(f'Invalid value "{text}" for {option.name}: {error}') from error
        return values

    @staticmethod
    def check_inputs(config: RunConfig) -> None:
        if (config.second is None) != (config.bipartite is None):
            raise ConfigError("--second and --bipartite must be given together")

        for manifest in (config.multiplex, config.second):
            if manifest is not None:
                config.layer_paths[manifest] = MultiplexManifest.read(manifest)

        for path in (config.bipartite, config.embedding):
            if path is not None and not os.path.isfile(path):
                raise ConfigError(f"Input file {path} does not exist")
