import time
from contextlib import contextmanager
from typing import Iterator, List, Tuple, Union
import logging

import numpy as np

from plexembed.cli.run_config import RunConfig
from plexembed.cli.run_manifest import RunManifest
from plexembed.clustering import ClusterReport, SphericalKMeans
from plexembed.embedding import EmbeddingDiverged, EmbeddingMatrix, NonFiniteEmbedding
from plexembed.errors import ConfigError, PlexEmbedError, UnknownNodeError
from plexembed.evaluation import (
    EvalReport,
    LinkPredictionEvaluator,
    LinkRecommender,
    MultiHetLinkPredictionEvaluator,
    NetworkReconstructionEvaluator,
    SplitScope,
)
from plexembed.graph import EdgeListParser, GraphFactory, MultiHetGraph, MultiplexGraph, MultiplexManifest
from plexembed.prebuilt import Embedder
from plexembed.rwr import RwrNotConverged, SimilarityCalculator
from plexembed.stats import GraphStats
from plexembed.utils import AtomicWriter

logger = logging.getLogger(__name__)

STAGE_OF_ERROR = {
    RwrNotConverged: "rwr",
    EmbeddingDiverged: "train",
    NonFiniteEmbedding: "train",
}

USAGE_ERRORS = (ConfigError, UnknownNodeError, ValueError)


class StageFailed(PlexEmbedError):
    """A failure of one pipeline stage, its message prefixed with the stage tag."""

    def __init__(self, stage: str, error: Exception):
        super().__init__(f"[{stage}] {error}")
        self.stage = stage
        self.error = error

    @property
    def exit_code(self) -> int:
        return 1 if isinstance(self.error, USAGE_ERRORS) else 2


@contextmanager
def stage(name: str) -> Iterator[None]:
    try:
        yield
    except StageFailed:
        raise
    except (PlexEmbedError, OSError, ValueError) as error:
        raise StageFailed(STAGE_OF_ERROR.get(type(error), name), error) from error


class Commands:
    """One method per subcommand; every output is written only once its stage succeeded."""

    def __init__(self, config: RunConfig):
        self.config = config

    def run(self) -> None:
        start_time = time.time()
        handler = {
            "embed": self.embed,
            "eval-lp": self.eval_lp,
            "eval-nr": self.eval_nr,
            "eval-mh": self.eval_mh,
            "rwr-dump": self.rwr_dump,
            "cluster": self.cluster,
            "predict": self.predict,
        }[self.config.command]
        handler()
        logger.info(f"Execution time of {self.config.command}: {time.time() - start_time:.2f} seconds")

    def embed(self) -> None:
        config = self.config
        graph = self.load_graph()

        embedder = Embedder(config.rwr, config.train)
        with stage("train"):
            embedding = embedder.embed(graph)

        with stage("write"):
            AtomicWriter.write(config.output, embedding.write)
            if config.similarity_out:
                AtomicWriter.write(config.similarity_out, embedder.similarity.write)
            RunManifest(
                config,
                node_types=embedding.node_types,
                extra={"loss_history": [[step, loss] for step, loss in embedder.trainer.loss_history]},
            ).write()

    def eval_lp(self) -> None:
        graph = self.load_graph()
        with stage("eval"):
            report = LinkPredictionEvaluator(self.config.pipeline_config()).evaluate(graph)
        self._write_report(report)

    def eval_nr(self) -> None:
        graph = self.load_graph()
        with stage("eval"):
            report = NetworkReconstructionEvaluator(self.config.pipeline_config()).evaluate(
                graph, self.config.values["subset_fraction"]
            )
        self._write_report(report)

    def eval_mh(self) -> None:
        graph = self.load_graph()
        with stage("eval"):
            report = MultiHetLinkPredictionEvaluator(self.config.pipeline_config(SplitScope.BIPARTITE_ONLY)).evaluate(
                graph
            )
        self._write_report(report)

    def rwr_dump(self) -> None:
        config = self.config
        graph = self.load_graph()
        nodes = graph.combined_index() if isinstance(graph, MultiHetGraph) else graph.nodes

        with stage("rwr"):
            seed = nodes.get_id(config.seed_node)
            distribution = SimilarityCalculator.seed_distribution(graph, config.rwr, seed)

        with stage("write"):
            AtomicWriter.write_text(config.output, self.distribution_text(distribution, nodes))
            RunManifest(config).write()

    def cluster(self) -> None:
        config = self.config
        with stage("load"):
            embedding = EmbeddingMatrix.read(config.embedding)
            node_types = RunManifest.read_node_types(config.embedding)
            if node_types is not None and len(node_types) == embedding.n:
                embedding.node_types = node_types

        with stage("cluster"):
            assignment = SphericalKMeans(config.clustering).fit(embedding)
            report = ClusterReport(assignment, embedding.nodes, embedding.node_types)
            query_text = report.render(config.query) if config.query else None

        with stage("write"):
            AtomicWriter.write_text(config.output, report.assignment_text())
            RunManifest(config, node_types=embedding.node_types, extra={"objective": assignment.inertia}).write()

        if query_text:
            print(query_text, end="")

    def predict(self) -> None:
        config = self.config
        graph = self.load_graph()
        with stage("load"):
            query_second = self.query_side(graph, config.query)

        with stage("train"):
            embedding = Embedder(config.rwr, config.train).embed(graph)

        with stage("eval"):
            recommendations = LinkRecommender(config.pipeline_config(SplitScope.BIPARTITE_ONLY)).recommend(
                graph,
                embedding,
                config.query,
                top_k=config.values["top_k"],
                operator=config.operator,
                query_second=query_second,
            )

        with stage("write"):
            AtomicWriter.write_text(config.output, self.ranking_text(recommendations))
            RunManifest(config, node_types=embedding.node_types).write()

    def load_graph(self) -> Union[MultiplexGraph, MultiHetGraph]:
        config = self.config
        with stage("load"):
            first = self._load_multiplex(config.multiplex)
            if config.command in ("eval-mh", "predict") and not config.is_multihet:
                raise ConfigError(f"{config.command} needs --second and --bipartite")
            if config.command in ("eval-lp", "eval-nr") and config.is_multihet:
                raise ConfigError(f"{config.command} works on a single multiplex")
            if not config.is_multihet:
                GraphStats(first).print()
                return first

            second = self._load_multiplex(config.second)
            graph = GraphFactory.build_multihet(first, second, EdgeListParser.parse_file(config.bipartite).edges)
            GraphStats(graph).print()
            return graph

    def _load_multiplex(self, manifest: str) -> MultiplexGraph:
        layer_paths = self.config.layer_paths.get(manifest) or MultiplexManifest.read(manifest)
        return GraphFactory.build_multiplex_from_files(layer_paths, MultiplexManifest.layer_names(layer_paths))

    def _write_report(self, report: EvalReport) -> None:
        with stage("write"):
            AtomicWriter.write_text(self.config.output, report.to_tsv())
            RunManifest(self.config, extra={"rows": len(report)}).write()

    @staticmethod
    def query_side(graph: MultiHetGraph, label: str) -> bool:
        """False when the label belongs to the first multiplex, True for the second."""
        if label in graph.mplex1.nodes:
            return False
        if label in graph.mplex2.nodes:
            return True
        raise UnknownNodeError(label)

    @staticmethod
    def distribution_text(distribution: np.ndarray, nodes) -> str:
        order = np.lexsort((np.arange(len(distribution)), -distribution))
        return "".join(
            f"{nodes.get_label(int(node_id))} {float(distribution[node_id])!r}\n"
            for node_id in order
            if distribution[node_id] > 0
        )

    @staticmethod
    def ranking_text(ranking: List[Tuple[str, float]]) -> str:
        return "".join(f"{label} {score!r}\n" for label, score in ranking)
