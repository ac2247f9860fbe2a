from typing import Callable, Optional

import numpy as np

from plexembed.edge_features import EdgeOperators, OperatorKind
from plexembed.evaluation.classifiers import Classifier, ClassifierFactory, ClassifierHyper
from plexembed.evaluation.labeled_edge_set import LabeledEdgeSet

ClassifierBuilder = Callable[[ClassifierHyper], Classifier]


class FeatureScoring:
    """Fits a fresh classifier on the features of one edge set and scores another."""

    @staticmethod
    def fit_and_score(
        train_features: np.ndarray,
        train_labels: np.ndarray,
        test_features: np.ndarray,
        hyper: ClassifierHyper,
        classifier_builder: Optional[ClassifierBuilder] = None,
    ) -> tuple:
        classifier = (classifier_builder or ClassifierFactory.create)(hyper)
        classifier.fit(train_features, train_labels)
        return classifier.predict_scores(test_features), classifier.describe()

    @staticmethod
    def operator_features(
        kind: OperatorKind, W: np.ndarray, edges: LabeledEdgeSet, halved_average: bool = False
    ) -> np.ndarray:
        return EdgeOperators.pair_features(kind, W, edges.pairs, halved_average)
