"""Canonical JSON serialization of SeqGraphs and per-graph statistics."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .config import PipelineParams
from .errors import ValidationError
from .seqdir import SeqGraph

SCHEMA_VERSION = 1

_WEIGHT_DIGITS = 10


def graph_stats(record: dict[str, Any], completion_edge_count: int) -> dict[str, Any]:
    """Statistics block for a serialized graph record."""
    n = len(record["vertices"])
    edge_count = len(record["edges"])
    total_sentences = sum(len(d["sentences"]) for d in record["documents"])
    dummy = next(v for v in record["vertices"] if v["is_dummy"])
    dummy_sentences = sum(len(ix) for ix in dummy["sentences"].values())
    max_edges = n * (n - 1) // 2
    return {
        "vertex_count": n,
        "edge_count": edge_count,
        "dummy_sentence_fraction": (
            round(dummy_sentences / total_sentences, _WEIGHT_DIGITS)
            if total_sentences
            else 0.0
        ),
        "bidirectional_edge_count": sum(
            1 for e in record["edges"] if e["bidirectional"]
        ),
        "completion_edge_count": completion_edge_count,
        "sparsity_ratio": (
            round(edge_count / max_edges, _WEIGHT_DIGITS) if max_edges else 0.0
        ),
    }


def seq_graph_to_dict(sg: SeqGraph, params: PipelineParams) -> dict[str, Any]:
    graph = sg.graph
    record: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "variant": sg.variant,
        "provenance": list(sg.provenance),
        "documents": [
            {
                "id": doc.id,
                "title": doc.title,
                "sentences": [s.text for s in doc.sentences],
            }
            for doc in graph.documents
        ],
        "vertices": [
            {
                "id": c.id,
                "keywords": sorted(c.keywords),
                "is_dummy": c.is_dummy,
                "sentences": graph.vertex_sentences(c.id),
            }
            for c in graph.vertices
        ],
        "edges": [
            {
                "from": e.src,
                "to": e.dst,
                "weight": round(e.weight, _WEIGHT_DIGITS),
                "bidirectional": e.bidirectional,
            }
            for e in sg.edges
        ],
        "params": params.to_dict(),
    }
    record["stats"] = graph_stats(record, sg.completion_edge_count)
    return record


def dumps(record: dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def save_seq_graph(sg: SeqGraph, params: PipelineParams, path: str | Path) -> None:
    _atomic_write(Path(path), dumps(seq_graph_to_dict(sg, params)))


def load_graph_record(path: str | Path) -> dict[str, Any]:
    record = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(record, dict) or "schema_version" not in record:
        raise ValidationError(f"{path}: not a SeqGraph record")
    if record["schema_version"] != SCHEMA_VERSION:
        raise ValidationError(
            f"{path}: unsupported schema_version {record['schema_version']}"
        )
    return record


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)
