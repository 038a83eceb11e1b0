import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seqjcig_classifier.embeddings import EmbeddingTable


def toy_record(variant="c_hp"):
    """A minimal 3-vertex, schema-1 graph record for two tiny documents."""
    return {
        "schema_version": 1,
        "variant": variant,
        "provenance": ["doc-a", "doc-b"],
        "documents": [
            {
                "id": "doc-a",
                "title": "A",
                "sentences": [
                    "loosen the screw on the panel",
                    "lift the panel away",
                    "unplug the cable",
                ],
            },
            {
                "id": "doc-b",
                "title": "B",
                "sentences": [
                    "remove the screw first",
                    "pull the cable out",
                ],
            },
        ],
        "vertices": [
            {
                "id": 0,
                "keywords": ["panel", "screw"],
                "is_dummy": False,
                "sentences": {"doc-a": [0, 1], "doc-b": [0]},
            },
            {
                "id": 1,
                "keywords": ["cable"],
                "is_dummy": False,
                "sentences": {"doc-a": [2], "doc-b": [1]},
            },
            {
                "id": 2,
                "keywords": [],
                "is_dummy": True,
                "sentences": {"doc-a": [], "doc-b": []},
            },
        ],
        "edges": [
            {"from": 0, "to": 1, "weight": 0.4, "bidirectional": False},
            {"from": 1, "to": 2, "weight": 0.1, "bidirectional": True},
        ],
        "params": {},
        "stats": {},
    }


def write_record(path: Path, record: dict) -> Path:
    path.write_text(json.dumps(record), encoding="utf-8")
    return path


@pytest.fixture
def record():
    return toy_record()


@pytest.fixture
def small_table():
    rng = np.random.default_rng(3)
    vocab = {t: i for i, t in enumerate(
        sorted({"loosen", "screw", "panel", "lift", "away", "unplug",
                "cable", "remove", "first", "pull", "out", "on", "the"})
    )}
    vectors = rng.normal(size=(len(vocab), 8))
    return EmbeddingTable(vocab=vocab, vectors=vectors, average=vectors.mean(axis=0))
