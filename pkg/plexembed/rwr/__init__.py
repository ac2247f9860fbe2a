from .rwr_params import RwrParams
from .supra_transition import SupraBlock, SupraTransition, SupraTransitionBuilder
from .random_walker import RandomWalker, RwrNotConverged
from .similarity import SimilarityCalculator, SimilarityMatrix
