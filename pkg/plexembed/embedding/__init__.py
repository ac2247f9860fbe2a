from .train_params import TrainParams
from .embedding_matrix import EmbeddingFormatError, EmbeddingMatrix
from .truncated_row import RowTruncator, TruncatedRow, TruncationError
from .samplers import NegativeSampler, PositiveSampler
from .nce import NceLoss, NceUpdater, NonFiniteEmbedding
from .trainer import EmbeddingDiverged, NceTrainer
