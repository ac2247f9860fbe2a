import itertools

import numpy as np
import pytest
from conftest import clique, multiplex_from_pairs, planted_multihet, two_cliques

from plexembed.edge_features import OperatorKind
from plexembed.embedding import EmbeddingMatrix, TrainParams
from plexembed.evaluation import (
    ClassifierHyper,
    ConnectedSplitter,
    EvalReport,
    EvalRow,
    LinkPredictionEvaluator,
    LinkRecommender,
    MultiHetLinkPredictionEvaluator,
    NetworkReconstructionEvaluator,
    PairSpace,
    PipelineConfig,
    SplitConfig,
)
from plexembed.prebuilt import Embedder
from plexembed.rwr import RwrParams

FAST_TRAIN = TrainParams(d=8, total_steps=300, workers=1)


class OracleClassifier:
    """Scores every pair with the label it was fitted on."""

    def fit(self, features, labels):
        self.labels = np.asarray(labels, dtype=np.float64)
        return self

    def predict_scores(self, features):
        return self.labels.copy()

    def describe(self):
        return "oracle"


class RandomClassifier:
    def __init__(self, rng: np.random.Generator):
        self.rng = rng

    def fit(self, features, labels):
        return self

    def predict_scores(self, features):
        return self.rng.random(len(features))

    def describe(self):
        return "random"


def seeded_config(seed: int, **kwargs) -> PipelineConfig:
    train = kwargs.pop("train", TrainParams(rng_seed=seed + 1))
    return PipelineConfig(split=SplitConfig(rng_seed=seed), train=train, **kwargs)


class TestLinkPrediction:
    def test_report_has_a_row_per_operator_and_heuristic(self):
        pairs, _, _ = two_cliques(5)
        graph = multiplex_from_pairs(pairs)
        report = LinkPredictionEvaluator(PipelineConfig(train=FAST_TRAIN)).evaluate(graph)
        assert len(report) == 9
        assert [row.operator for row in report.rows] == [
            "hadamard",
            "average",
            "weighted_l1",
            "weighted_l2",
            "cosine",
            "jc-av",
            "cn-av",
            "aa-av",
            "pa-av",
        ]
        assert all(row.metric == "roc_auc" and 0 <= row.value <= 1 for row in report.rows)

    def test_edge_sets_are_disjoint_and_labelled(self):
        pairs, _, _ = two_cliques(6)
        graph = multiplex_from_pairs(pairs, pairs[::2])
        rng = np.random.default_rng(0)
        train_graph, splits = ConnectedSplitter.split_multiplex(graph, 0.3, rng)
        train_edges, test_edges = LinkPredictionEvaluator.build_edge_sets(graph, train_graph, splits, rng)

        space = PairSpace.multiplex(graph)
        train_codes = set(space.encode(train_edges.pairs).tolist())
        test_codes = set(space.encode(test_edges.pairs).tolist())
        assert not train_codes & test_codes
        assert train_edges.positive_count * 2 == len(train_edges)
        assert test_edges.positive_count * 2 == len(test_edges)
        for (u, v), label in zip(test_edges.pairs.tolist(), test_edges.labels.tolist()):
            assert graph.has_edge_in_any_layer(u, v) == bool(label)
            if label:
                assert not train_graph.has_edge_in_any_layer(u, v)

    @pytest.mark.slow
    def test_planted_cliques_are_predictable(self):
        pairs, _, _ = two_cliques(20, bridges=2)
        graph = multiplex_from_pairs(pairs, pairs)
        values = []
        for seed in range(5):
            config = seeded_config(seed, operators=(OperatorKind.HADAMARD,), heuristics=())
            values.append(LinkPredictionEvaluator(config).evaluate(graph).value_for("hadamard"))
        assert np.mean(values) >= 0.85

    @pytest.mark.slow
    def test_random_graph_stays_near_chance(self):
        rng = np.random.default_rng(11)
        labels = [f"v{i}" for i in range(40)]
        pairs = [(labels[u], labels[v]) for u, v in itertools.combinations(range(40), 2) if rng.random() < 0.15]
        graph = multiplex_from_pairs(pairs)
        values = []
        for seed in range(5):
            config = seeded_config(seed, operators=(OperatorKind.HADAMARD,), heuristics=())
            values.append(LinkPredictionEvaluator(config).evaluate(graph).value_for("hadamard"))
        assert abs(np.mean(values) - 0.5) <= 0.1


class TestNetworkReconstruction:
    @pytest.fixture
    def embedded(self):
        pairs, _, _ = two_cliques(10, bridges=2)
        graph = multiplex_from_pairs(pairs, pairs[::3])
        embedding = EmbeddingMatrix.initialize(graph.n, 4, rng_seed=0, nodes=graph.nodes)
        return graph, embedding

    def test_oracle_reaches_full_precision(self, embedded):
        graph, embedding = embedded
        evaluator = NetworkReconstructionEvaluator(classifier_builder=lambda hyper: OracleClassifier())
        report = evaluator.evaluate(graph, 0.5, embedding=embedding)
        assert len(report) == 5 * graph.layer_count + 5
        assert all(row.value == 1.0 for row in report.rows)
        assert {row.layer for row in report.rows} == {"layer1", "layer2", "average"}

    def test_random_scores_give_the_prevalence(self, embedded):
        graph, embedding = embedded
        rng = np.random.default_rng(7)
        layer = graph.layers[0]
        prevalence = layer.edge_count / NetworkReconstructionEvaluator.pair_universe_size(layer.n)

        values = []
        for seed in range(40):
            config = seeded_config(seed)
            evaluator = NetworkReconstructionEvaluator(config, classifier_builder=lambda hyper: RandomClassifier(rng))
            report = evaluator.evaluate(graph.with_layers(graph.layers[:1]), 1.0, embedding=embedding)
            values += [row.value for row in report.rows if row.layer == "layer1"]
        assert np.mean(values) == pytest.approx(prevalence, abs=0.03)

    def test_full_subset_is_the_pair_universe(self):
        pairs, _, _ = two_cliques(10)
        layer = multiplex_from_pairs(pairs).layers[0]
        sampled = NetworkReconstructionEvaluator.sample_pairs(layer, 1.0, np.random.default_rng(0))
        assert len(sampled) == 190
        assert sorted(map(tuple, sampled.tolist())) == list(zip(*np.triu_indices(20, k=1)))

    def test_upper_triangle_codes(self):
        for n in (2, 3, 7, 50):
            rows, cols = np.triu_indices(n, k=1)
            decoded = NetworkReconstructionEvaluator.decode_upper_triangle(np.arange(len(rows)), n)
            assert decoded[:, 0].tolist() == rows.tolist()
            assert decoded[:, 1].tolist() == cols.tolist()

    def test_labels_follow_adjacency(self, toy_multiplex):
        layer = toy_multiplex.layers[0]
        pairs = np.array([[0, 1], [0, 3], [1, 3], [4, 5]])
        assert NetworkReconstructionEvaluator.label_pairs(layer, pairs).tolist() == [1, 1, 0, 0]

    def test_layer_without_sampled_edges_is_skipped(self, embedded):
        graph, embedding = embedded
        empty = graph.layers[1].with_edges([], [])
        evaluator = NetworkReconstructionEvaluator(classifier_builder=lambda hyper: OracleClassifier())
        report = evaluator.evaluate(graph.with_layers([graph.layers[0], empty]), 1.0, embedding=embedding)
        assert {row.layer for row in report.rows} == {"layer1", "average"}

    def test_layer_without_sampled_non_edges_is_skipped(self):
        labels = [f"c{i}" for i in range(6)]
        graph = multiplex_from_pairs(clique(labels), list(zip(labels, labels[1:])))
        embedding = EmbeddingMatrix.initialize(graph.n, 4, rng_seed=0, nodes=graph.nodes)
        report = NetworkReconstructionEvaluator().evaluate(graph, 1.0, embedding=embedding)
        assert {row.layer for row in report.rows} == {"layer2", "average"}

    def test_complete_graph_gives_an_empty_report(self):
        graph = multiplex_from_pairs(clique([f"c{i}" for i in range(6)]))
        embedding = EmbeddingMatrix.initialize(graph.n, 4, rng_seed=0, nodes=graph.nodes)
        report = NetworkReconstructionEvaluator().evaluate(graph, 0.5, embedding=embedding)
        assert len(report) == 0

    def test_class_weights_are_forced(self):
        evaluator = NetworkReconstructionEvaluator(PipelineConfig(classifier=ClassifierHyper(class_weighted=False)))
        assert evaluator.config.classifier.class_weighted

    def test_subset_fraction_range(self, embedded):
        graph, embedding = embedded
        with pytest.raises(ValueError):
            NetworkReconstructionEvaluator().evaluate(graph, 0.0, embedding=embedding)


class TestMultiHetLinkPrediction:
    def test_held_out_edges_stay_out_of_training(self):
        graph = planted_multihet()
        rng = np.random.default_rng(0)
        kept, held_out = MultiHetLinkPredictionEvaluator.split_bipartite(graph.bipartite, 0.3, rng)
        assert held_out.count == 30
        assert not kept.pairs & held_out.pairs
        assert kept.pairs | held_out.pairs == graph.bipartite.pairs

        train_edges, test_edges = MultiHetLinkPredictionEvaluator.build_edge_sets(graph, kept, held_out, rng)
        train_pairs = set(map(tuple, train_edges.pairs.tolist()))
        test_pairs = set(map(tuple, test_edges.pairs.tolist()))
        assert not train_pairs & test_pairs
        for u, v in train_pairs | test_pairs:
            assert u < graph.n <= v

    def test_report_has_a_row_per_operator(self):
        graph = planted_multihet(groups=3, size=3)
        report = MultiHetLinkPredictionEvaluator(PipelineConfig(train=FAST_TRAIN)).evaluate(graph)
        assert len(report) == 5
        assert {row.layer for row in report.rows} == {"bipartite"}
        assert all("bipartite_only" in row.split for row in report.rows)

    @pytest.mark.slow
    def test_planted_groups_are_predictable(self):
        graph = planted_multihet()
        values = []
        for seed in range(5):
            config = seeded_config(seed, operators=(OperatorKind.HADAMARD,))
            values.append(MultiHetLinkPredictionEvaluator(config).evaluate(graph).value_for("hadamard", "bipartite"))
        assert np.mean(values) >= 0.8

    @pytest.mark.slow
    def test_decoupled_multiplexes_score_lower(self):
        # at lam=0 the embedding holds no cross-multiplex signal; what is left
        # comes from the classifier matching groups seen in the training edges
        graph = planted_multihet()
        coupled, decoupled = [], []
        for seed in range(5):
            for lam, values in ((0.5, coupled), (0.0, decoupled)):
                config = seeded_config(seed, rwr=RwrParams(lam=lam), operators=(OperatorKind.HADAMARD,))
                report = MultiHetLinkPredictionEvaluator(config).evaluate(graph)
                values.append(report.value_for("hadamard", "bipartite"))
        assert np.mean(decoupled) < np.mean(coupled) - 0.05


class TestLinkRecommender:
    def test_ranks_unlinked_partners(self):
        graph = planted_multihet(groups=3, size=3)
        embedding = Embedder(train_params=FAST_TRAIN).embed(graph)
        ranked = LinkRecommender().recommend(graph, embedding, "g0_0", top_k=10)
        # g0_0 is already linked to every d0_*
        assert len(ranked) == 6
        assert not any(label.startswith("d0_") for label, _ in ranked)
        scores = [score for _, score in ranked]
        assert scores == sorted(scores, reverse=True)

    def test_query_on_the_second_side(self):
        graph = planted_multihet(groups=3, size=3)
        embedding = Embedder(train_params=FAST_TRAIN).embed(graph)
        ranked = LinkRecommender().recommend(graph, embedding, "d1_2", top_k=2, query_second=True)
        assert len(ranked) == 2
        assert not any(label.startswith("g1_") for label, _ in ranked)

    @pytest.mark.slow
    def test_recovers_a_removed_partner(self):
        graph = planted_multihet()
        removed = {(graph.mplex1.nodes.get_id("g0_0"), graph.mplex2.nodes.get_id("d0_0"))}
        pairs = zip(graph.bipartite.left.tolist(), graph.bipartite.right.tolist())
        positions = [i for i, pair in enumerate(pairs) if pair not in removed]
        trimmed = graph.with_bipartite(graph.bipartite.subset(np.array(positions)))
        embedding = Embedder().embed(trimmed)
        ranked = LinkRecommender().recommend(trimmed, embedding, "g0_0", top_k=1)
        assert ranked[0][0] == "d0_0"

    def test_rejects_top_k(self, toy_multihet):
        embedding = EmbeddingMatrix.initialize(toy_multihet.n_total, 2, rng_seed=0)
        with pytest.raises(ValueError):
            LinkRecommender().recommend(toy_multihet, embedding, "a", top_k=0)


class TestEvalReport:
    def row(self, operator: str, value: float, layer: str = "all") -> EvalRow:
        return EvalRow(method="m", operator=operator, metric="roc_auc", value=value, seed=0, split="s", layer=layer)

    def test_tsv_columns(self):
        report = EvalReport([self.row("hadamard", 0.91234567)])
        header, line = report.to_tsv().splitlines()
        assert header.split("\t") == EvalReport.COLUMNS
        assert line.split("\t")[4] == "0.912346"

    def test_value_lookup(self):
        report = EvalReport([self.row("hadamard", 0.5, "layer1"), self.row("hadamard", 0.7)])
        assert report.value_for("hadamard") == 0.7
        assert report.value_for("hadamard", "layer1") == 0.5
        assert report.value_for("cosine") is None

    def test_value_out_of_range(self):
        with pytest.raises(ValueError):
            self.row("hadamard", 1.2)
