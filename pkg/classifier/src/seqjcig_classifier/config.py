"""Training configuration."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass


_ALLOWED_DIMS = (100, 200)


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters for embedding training and the classifier.

    ``split`` is the (train, validation, test) fraction triple and must sum
    to 1.  The embedding dimension is restricted to the supported sizes.
    """

    embedding_dim: int = 100
    learning_rate: float = 0.0005
    epochs: int = 50
    early_stopping_patience: int = 8
    split: tuple[float, float, float] = (0.6, 0.2, 0.2)
    gcn_layers: int = 3
    gcn_hidden: int = 128
    mlp_hidden: int = 64
    embedding_epochs: int = 5
    embedding_window: int = 3
    embedding_negatives: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.embedding_dim not in _ALLOWED_DIMS:
            raise ValueError(f"embedding_dim must be one of {_ALLOWED_DIMS}")
        if len(self.split) != 3 or abs(sum(self.split) - 1.0) > 1e-9:
            raise ValueError("split fractions must sum to 1")
        if any(f <= 0 for f in self.split):
            raise ValueError("split fractions must be positive")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if self.epochs < 1 or self.gcn_layers < 1:
            raise ValueError("epochs and gcn_layers must be >= 1")

    def replace(self, **changes) -> "TrainConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["split"] = list(self.split)
        return d
