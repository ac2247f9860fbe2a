from .split_config import SplitConfig, SplitScope
from .labeled_edge_set import LabeledEdgeSet
from .connected_split import ConnectedSplitter, EdgeSplit
from .non_edge_sampler import NonEdgeSampler, NonEdgeSamplingError, PairSpace
from .classifiers import (
    Classifier,
    ClassifierError,
    ClassifierFactory,
    ClassifierHyper,
    SklearnClassifier,
    train_logistic,
)
from .metrics import MetricError, Metrics
from .eval_report import EvalReport, EvalRow
from .pipeline_config import PipelineConfig
from .link_prediction import EvaluationError, LinkPredictionEvaluator
from .network_reconstruction import NetworkReconstructionEvaluator
from .multihet_link_prediction import MultiHetLinkPredictionEvaluator
from .link_recommender import LinkRecommender
