from typing import Optional, Union

from plexembed.embedding import EmbeddingMatrix, NceTrainer, TrainParams
from plexembed.graph import MultiHetGraph, MultiplexGraph
from plexembed.rwr import RwrParams, SimilarityCalculator, SimilarityMatrix


class Embedder:
    def __init__(self, rwr_params: RwrParams = None, train_params: TrainParams = None):
        """
        Runs the full embedding pipeline: one random walk with restart per node
        gives the similarity matrix, which the NCE trainer then fits.

        Args:
            rwr_params: walk parameters, defaults to RwrParams()
            train_params: training parameters, defaults to TrainParams()

        Example:
            embedder = Embedder(train_params=TrainParams(d=64, rng_seed=7))
            embedding = embedder.embed(graph)

        """
        self.rwr_params = rwr_params or RwrParams()
        self.train_params = train_params or TrainParams()

        self.similarity: Optional[SimilarityMatrix] = None
        self.trainer: Optional[NceTrainer] = None

    def embed(self, graph: Union[MultiplexGraph, MultiHetGraph]) -> EmbeddingMatrix:
        self.similarity = SimilarityCalculator.similarity_matrix(
            graph, self.rwr_params, workers=self.train_params.workers
        )
        self.trainer = NceTrainer(self.train_params)
        return self.trainer.train(self.similarity)
