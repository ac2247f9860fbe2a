from .embedder import Embedder
