from dataclasses import dataclass
from typing import Protocol

import numpy as np
from sklearn.ensemble import RandomForestClassifier
from sklearn.linear_model import LogisticRegression
from sklearn.pipeline import Pipeline, make_pipeline
from sklearn.preprocessing import StandardScaler

from plexembed.errors import PlexEmbedError


class ClassifierError(PlexEmbedError):
    pass


@dataclass(frozen=True)
class ClassifierHyper:
    """
    Args:
        kind: "logistic" or "forest"
        epochs: solver iteration budget of the logistic model
        regularization: L2 strength (inverse of scikit-learn's C)
        class_weighted: weight classes by inverse frequency
        n_estimators: trees of the forest
    """

    kind: str = "logistic"
    epochs: int = 1000
    regularization: float = 1.0
    class_weighted: bool = False
    n_estimators: int = 100
    rng_seed: int = 0

    def __post_init__(self):
        if self.kind not in ClassifierFactory.KINDS:
            raise ValueError(f'Classifier kind "{self.kind}" is not supported')
        if self.regularization <= 0:
            raise ValueError(f"regularization must be positive, got {self.regularization}")


class Classifier(Protocol):
    def fit(self, features: np.ndarray, labels: np.ndarray) -> "Classifier": ...

    def predict_scores(self, features: np.ndarray) -> np.ndarray: ...

    def describe(self) -> str: ...


class SklearnClassifier:
    """Adapts a scikit-learn estimator to the Classifier protocol; scores are P(label = 1)."""

    estimator: Pipeline

    def __init__(self, estimator, description: str):
        self.estimator = estimator
        self.description = description

    def fit(self, features: np.ndarray, labels: np.ndarray) -> "SklearnClassifier":
        labels = np.asarray(labels)
        if len(np.unique(labels)) < 2:
            raise ClassifierError("Classifier training needs examples of both classes")
        self.estimator.fit(np.asarray(features, dtype=np.float64), labels)
        return self

    def predict_scores(self, features: np.ndarray) -> np.ndarray:
        probabilities = self.estimator.predict_proba(np.asarray(features, dtype=np.float64))
        positive_column = list(self.estimator.classes_).index(1)
        return probabilities[:, positive_column]

    def describe(self) -> str:
        return self.description


class ClassifierFactory:
    KINDS = ("logistic", "forest")

    @staticmethod
    def create(hyper: ClassifierHyper) -> SklearnClassifier:
        class_weight = "balanced" if hyper.class_weighted else None
        if hyper.kind == "forest":
            estimator = RandomForestClassifier(
                n_estimators=hyper.n_estimators, class_weight=class_weight, random_state=hyper.rng_seed
            )
            return SklearnClassifier(estimator, f"random_forest(trees={hyper.n_estimators},weights={class_weight})")

        estimator = make_pipeline(
            StandardScaler(),
            LogisticRegression(
                C=1.0 / hyper.regularization,
                class_weight=class_weight,
                max_iter=hyper.epochs,
                random_state=hyper.rng_seed,
            ),
        )
        return SklearnClassifier(estimator, f"logistic(l2={hyper.regularization},weights={class_weight})")


def train_logistic(
    features: np.ndarray, labels: np.ndarray, hyper: ClassifierHyper = ClassifierHyper()
) -> SklearnClassifier:
    if hyper.kind != "logistic":
        raise ValueError(f'train_logistic needs a logistic configuration, got "{hyper.kind}"')
    return ClassifierFactory.create(hyper).fit(features, labels)
