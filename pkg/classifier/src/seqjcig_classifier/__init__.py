"""Document-pair similarity classifier consuming SeqGraph JSON files."""

from .config import TrainConfig
from .embeddings import EmbeddingTable, train_embeddings
from .train import train_and_eval

__all__ = ["TrainConfig", "EmbeddingTable", "train_embeddings", "train_and_eval"]

__version__ = "0.1.0"
