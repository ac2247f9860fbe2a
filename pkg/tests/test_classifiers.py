import numpy as np
import pytest

from plexembed.evaluation import ClassifierError, ClassifierFactory, ClassifierHyper, train_logistic


def blobs(rng: np.random.Generator, positives: int, negatives: int):
    features = np.vstack(
        [rng.normal(loc=(2.0, 2.0), scale=0.5, size=(positives, 2)), rng.normal(loc=(-2.0, -2.0), size=(negatives, 2))]
    )
    labels = np.concatenate([np.ones(positives, dtype=int), np.zeros(negatives, dtype=int)])
    return features, labels


class TestTrainLogistic:
    def test_separable_blobs(self):
        features, labels = blobs(np.random.default_rng(0), 100, 100)
        classifier = train_logistic(features, labels)
        accuracy = ((classifier.predict_scores(features) > 0.5) == labels).mean()
        assert accuracy >= 0.95

    def test_uninformative_features(self):
        features = np.ones((20, 3))
        labels = np.array([0, 1] * 10)
        scores = train_logistic(features, labels).predict_scores(np.ones((4, 3)))
        assert scores == pytest.approx(np.full(4, 0.5), abs=1e-6)

    def test_class_weights_recover_the_minority(self):
        features, labels = blobs(np.random.default_rng(1), 20, 180)
        classifier = train_logistic(features, labels, ClassifierHyper(class_weighted=True))
        predicted = classifier.predict_scores(features) > 0.5
        assert predicted[labels == 1].mean() >= 0.9

    def test_scores_are_probabilities(self):
        rng = np.random.default_rng(2)
        features, labels = rng.standard_normal((50, 4)), np.array([0, 1] * 25)
        scores = train_logistic(features, labels).predict_scores(rng.standard_normal((30, 4)) * 10)
        assert scores.min() >= 0.0 and scores.max() <= 1.0

    def test_same_input_same_model(self):
        features, labels = blobs(np.random.default_rng(3), 30, 30)
        first = train_logistic(features, labels).predict_scores(features)
        second = train_logistic(features, labels).predict_scores(features)
        assert np.array_equal(first, second)

    def test_single_class(self):
        with pytest.raises(ClassifierError):
            train_logistic(np.zeros((4, 2)), np.ones(4, dtype=int))

    def test_needs_a_logistic_configuration(self):
        with pytest.raises(ValueError):
            train_logistic(np.zeros((2, 1)), np.array([0, 1]), ClassifierHyper(kind="forest"))


class TestClassifierFactory:
    def test_forest_is_pluggable(self):
        features, labels = blobs(np.random.default_rng(4), 40, 40)
        classifier = ClassifierFactory.create(ClassifierHyper(kind="forest", n_estimators=20)).fit(features, labels)
        assert ((classifier.predict_scores(features) > 0.5) == labels).mean() >= 0.95
        assert classifier.describe().startswith("random_forest")

    def test_description_records_the_weighting(self):
        assert "balanced" in ClassifierFactory.create(ClassifierHyper(class_weighted=True)).describe()

    @pytest.mark.parametrize("kwargs", [{"kind": "svm"}, {"regularization": 0.0}])
    def test_rejects_configuration(self, kwargs):
        with pytest.raises(ValueError):
            ClassifierHyper(**kwargs)
