from dataclasses import dataclass, field
from typing import Tuple

from plexembed.edge_features import HeuristicKind, OperatorKind
from plexembed.embedding import TrainParams
from plexembed.evaluation.classifiers import ClassifierHyper
from plexembed.evaluation.split_config import SplitConfig
from plexembed.rwr import RwrParams


@dataclass(frozen=True)
class PipelineConfig:
    rwr: RwrParams = field(default_factory=RwrParams)
    train: TrainParams = field(default_factory=TrainParams)
    split: SplitConfig = field(default_factory=SplitConfig)
    classifier: ClassifierHyper = field(default_factory=ClassifierHyper)
    operators: Tuple[OperatorKind, ...] = tuple(OperatorKind)
    heuristics: Tuple[HeuristicKind, ...] = tuple(HeuristicKind)
    halved_average: bool = False
    method: str = "plexembed"
