"""Pipeline parameters with validated defaults and JSON config loading."""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import ValidationError

VARIANTS = ("i_sgs", "c_sgs", "i_hp", "c_hp", "undirected")


@dataclass(frozen=True)
class PipelineParams:
    window: int = 3
    top_k: int | None = None  # None -> max(5, ceil(0.15 * filtered tokens))
    damping: float = 0.85
    pagerank_tol: float = 1e-8
    max_iter: int = 100
    community_algorithm: str = "louvain"
    community_seed: int = 0
    sim_thresh: float = 0.15
    w_thresh: float = 0.05
    variant: str = "c_hp"
    negative_ratio: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.window < 2:
            raise ValidationError("window must be >= 2")
        if not 0.0 < self.damping < 1.0:
            raise ValidationError("damping must lie in (0, 1)")
        if self.pagerank_tol <= 0 or self.max_iter < 1:
            raise ValidationError("pagerank_tol must be > 0 and max_iter >= 1")
        if not 0.0 <= self.sim_thresh <= 1.0:
            raise ValidationError("sim_thresh must lie in [0, 1]")
        if not 0.0 <= self.w_thresh <= 1.0:
            raise ValidationError("w_thresh must lie in [0, 1]")
        if self.variant not in VARIANTS:
            raise ValidationError(f"unknown variant {self.variant!r}")
        if self.community_algorithm not in ("louvain", "greedy_modularity"):
            raise ValidationError(
                f"unknown community algorithm {self.community_algorithm!r}"
            )
        if self.negative_ratio < 0:
            raise ValidationError("negative_ratio must be >= 0")
        if self.top_k is not None and self.top_k < 1:
            raise ValidationError("top_k must be >= 1")

    def replace(self, **kwargs: Any) -> "PipelineParams":
        return dataclasses.replace(self, **kwargs)

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PipelineParams":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineParams":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValidationError("config file must hold a JSON object")
        return cls.from_dict(data)
