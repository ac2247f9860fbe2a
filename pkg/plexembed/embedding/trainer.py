import multiprocessing
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple
import logging

import numpy as np

from plexembed.embedding.embedding_matrix import EmbeddingMatrix
from plexembed.embedding.nce import NceLoss, NceUpdater
from plexembed.embedding.samplers import NegativeSampler
from plexembed.embedding.train_params import TrainParams
from plexembed.embedding.truncated_row import RowTruncator, TruncatedRow, TruncationError
from plexembed.errors import PlexEmbedError
from plexembed.logger import Logger
from plexembed.rwr import SimilarityMatrix

logger = logging.getLogger(__name__)

# per-process view of the shared matrix, set once by the pool initializer
_LANE_STATE: Dict[str, Any] = {}


class EmbeddingDiverged(PlexEmbedError):
    def __init__(self, node_id: int, norm: float, step: int):
        super().__init__(f"Embedding of node {node_id} reached norm {norm:.3e} after {step} steps")
        self.node_id = node_id
        self.norm = norm
        self.step = step

    def __reduce__(self):
        return EmbeddingDiverged, (self.node_id, self.norm, self.step)


class NceTrainer:
    """
    Fits W so that sigmoid(w_u . w_v) separates similarity samples from uniform
    noise.

    With several workers each lane is a process updating one shared-memory W
    without locks, so concurrent updates to the same row can be lost. With one
    worker everything runs in-process and a fixed seed reproduces W bit for bit.
    """

    BATCH_SIZE = 512

    params: TrainParams
    loss_history: List[Tuple[int, float]]

    def __init__(self, params: TrainParams):
        self.params = params
        self.loss_history = []

    def train(self, sim: SimilarityMatrix) -> EmbeddingMatrix:
        start_time = time.time()
        n = sim.n
        params = self.params.resolved(n)
        rows = self.truncate_rows(sim, params.n_max)

        embedding = EmbeddingMatrix.initialize(n, params.d, params.rng_seed, nodes=sim.nodes)
        embedding.node_types = sim.node_types

        if params.workers == 1 or params.total_steps == 0:
            self._run_rounds(embedding.W, rows, params, executor=None)
        else:
            context = multiprocessing.get_context("spawn")
            buffer = context.RawArray("d", embedding.W.size)
            shared = np.frombuffer(buffer, dtype=np.float64).reshape(embedding.W.shape)
            shared[:] = embedding.W
            with ProcessPoolExecutor(
                max_workers=params.workers,
                mp_context=context,
                initializer=NceTrainer._attach_lane,
                initargs=(buffer, embedding.W.shape, rows),
            ) as executor:
                self._run_rounds(shared, rows, params, executor)
            embedding.W[:] = shared

        if not embedding.is_finite():
            raise EmbeddingDiverged(
                int(np.argmax(~np.isfinite(embedding.W).all(axis=1))), float("nan"), params.total_steps
            )

        logger.info(f"Execution time of train: {time.time() - start_time:.2f} seconds")
        return embedding

    @staticmethod
    def truncate_rows(sim: SimilarityMatrix, n_max: int) -> List[Optional[TruncatedRow]]:
        """Truncate every row once; rows with no mass outside their own node become None."""
        rows: List[Optional[TruncatedRow]] = []
        for node_id in range(sim.n):
            try:
                rows.append(RowTruncator.truncate_normalize(sim.row(node_id), n_max, exclude=node_id))
            except TruncationError:
                logger.warning(f"Node {sim.nodes.get_label(node_id)} has no similarity mass, skipping its positives")
                rows.append(None)
        return rows

    def _run_rounds(
        self, W: np.ndarray, rows: List[Optional[TruncatedRow]], params: TrainParams, executor: Optional[Executor]
    ) -> None:
        n = W.shape[0]
        seed_sequence = np.random.SeedSequence(params.rng_seed)
        monitor_seed, *lane_seeds = seed_sequence.spawn(params.workers + 1)
        lane_rngs = [np.random.default_rng(seed) for seed in lane_seeds]

        bias_pos, bias_neg = params.bias_pos(n), params.bias_neg(n)
        self.loss_history = [(0, self._monitor_loss(W, rows, params, monitor_seed, bias_pos, bias_neg))]

        round_sizes = self._round_sizes(params.total_steps, params.checkpoints)
        done = 0
        for position, round_size in enumerate(round_sizes):
            lane_steps = self._split(round_size, params.workers)
            if executor is None:
                for lane, steps in enumerate(lane_steps):
                    lane_rngs[lane] = self._run_lane(W, rows, steps, lane_rngs[lane], params, bias_pos, bias_neg, done)
            else:
                futures = {
                    lane: executor.submit(
                        NceTrainer._run_shared_lane, steps, lane_rngs[lane], params, bias_pos, bias_neg, done
                    )
                    for lane, steps in enumerate(lane_steps)
                    if steps
                }
                # a lane's generator comes back advanced, so the next round draws fresh events
                for lane, future in futures.items():
                    lane_rngs[lane] = future.result()

            done += round_size
            self._check_divergence(W, params.max_norm, done)
            loss = self._monitor_loss(W, rows, params, monitor_seed, bias_pos, bias_neg)
            self.loss_history.append((done, loss))
            Logger.log_progress(
                position, max(1, len(round_sizes) // 5), f"Step {done}/{params.total_steps}: loss {loss:.4f}"
            )

    @staticmethod
    def _attach_lane(buffer, shape: Tuple[int, int], rows: List[Optional[TruncatedRow]]) -> None:
        _LANE_STATE["W"] = np.frombuffer(buffer, dtype=np.float64).reshape(shape)
        _LANE_STATE["rows"] = rows

    @staticmethod
    def _run_shared_lane(
        steps: int, rng: np.random.Generator, params: TrainParams, bias_pos: float, bias_neg: float, offset: int
    ) -> np.random.Generator:
        return NceTrainer._run_lane(
            _LANE_STATE["W"], _LANE_STATE["rows"], steps, rng, params, bias_pos, bias_neg, offset
        )

    @staticmethod
    def _run_lane(
        W: np.ndarray,
        rows: List[Optional[TruncatedRow]],
        steps: int,
        rng: np.random.Generator,
        params: TrainParams,
        bias_pos: float,
        bias_neg: float,
        offset: int = 0,
    ) -> np.random.Generator:
        n = W.shape[0]
        for start in range(0, steps, NceTrainer.BATCH_SIZE):
            batch = min(NceTrainer.BATCH_SIZE, steps - start)
            sources = rng.integers(n, size=batch)
            uniforms = rng.random(batch)
            negatives = NegativeSampler.sample_batch(sources, n, params.s, rng)

            for position, (u, uniform, negative_row) in enumerate(
                zip(sources.tolist(), uniforms.tolist(), negatives.tolist())
            ):
                touched = [u] + negative_row
                row = rows[u]
                if row is not None:
                    positive = row.draw(uniform)
                    NceUpdater.update(W, u, positive, 1, bias_pos, params.lr)
                    touched.append(positive)
                for v in negative_row:
                    NceUpdater.update(W, u, v, 0, bias_neg, params.lr)

                # step is lane-local within the round
                NceTrainer._check_divergence(W[touched], params.max_norm, offset + start + position + 1, touched)
        return rng

    @staticmethod
    def _monitor_loss(W, rows, params: TrainParams, monitor_seed, bias_pos: float, bias_neg: float) -> float:
        # same events at every checkpoint so the history is comparable
        rng = np.random.default_rng(monitor_seed)
        return NceLoss.estimate(W, rows, params.monitor_sample, rng, params.s, bias_pos, bias_neg)

    @staticmethod
    def _check_divergence(W: np.ndarray, max_norm: float, step: int, node_ids: Optional[List[int]] = None) -> None:
        norms = np.linalg.norm(W, axis=1)
        worst = int(np.argmax(norms))
        if not np.isfinite(norms[worst]) or norms[worst] > max_norm:
            node_id = node_ids[worst] if node_ids is not None else worst
            raise EmbeddingDiverged(node_id, float(norms[worst]), step)

    @staticmethod
    def _round_sizes(total_steps: int, checkpoints: int) -> List[int]:
        if total_steps == 0:
            return []
        rounds = max(1, min(checkpoints, total_steps))
        return NceTrainer._split(total_steps, rounds)

    @staticmethod
    def _split(total: int, parts: int) -> List[int]:
        base, remainder = divmod(total, parts)
        return [base + (1 if position < remainder else 0) for position in range(parts)]
