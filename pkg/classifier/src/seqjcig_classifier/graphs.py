"""Loading SeqGraph JSON records into model-ready structures."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .tokens import tokenize

SUPPORTED_SCHEMA = 1


class GraphSchemaError(ValueError):
    """Raised for unreadable or unsupported graph records."""


@dataclass
class GraphInstance:
    """One document pair ready for the model.

    ``tokens_a[v]`` / ``tokens_b[v]`` hold the tokens of the sentences the
    pipeline assigned to vertex ``v`` from each document, concatenated in
    original document order (empty list when the document contributes no
    sentences to the vertex).  ``adjacency`` is the dense directed matrix:
    ``adjacency[i, j]`` holds the edge weight for j→i (0 when absent), with
    bidirectional edges expanded to both directions.
    """

    doc_a: str
    doc_b: str
    variant: str
    tokens_a: list[list[str]]
    tokens_b: list[list[str]]
    adjacency: np.ndarray
    sentence_tokens: list[list[str]]  # every sentence of both documents

    @property
    def n_vertices(self) -> int:
        return len(self.tokens_a)


def load_graph(path: str | Path) -> GraphInstance:
    path = Path(path)
    try:
        record = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphSchemaError(f"{path}: unreadable graph record ({exc})") from exc
    if not isinstance(record, dict) or record.get("schema_version") != SUPPORTED_SCHEMA:
        raise GraphSchemaError(
            f"{path}: unsupported schema_version {record.get('schema_version')!r}"
        )
    return graph_from_record(record)


def graph_from_record(record: dict) -> GraphInstance:
    docs = record["documents"]
    if len(docs) != 2:
        raise GraphSchemaError("graph record must contain exactly two documents")
    doc_a, doc_b = docs[0], docs[1]
    vertices = sorted(record["vertices"], key=lambda v: v["id"])
    if [v["id"] for v in vertices] != list(range(len(vertices))):
        raise GraphSchemaError("vertex ids must be dense 0..n-1")
    if not vertices:
        raise GraphSchemaError("graph record has no vertices")

    sent_tokens = {
        doc["id"]: [tokenize(text) for text in doc["sentences"]] for doc in docs
    }

    def vertex_tokens(vertex, doc_id):
        indices = vertex["sentences"].get(doc_id, [])
        return [t for i in sorted(indices) for t in sent_tokens[doc_id][i]]

    tokens_a = [vertex_tokens(v, doc_a["id"]) for v in vertices]
    tokens_b = [vertex_tokens(v, doc_b["id"]) for v in vertices]

    n = len(vertices)
    adjacency = np.zeros((n, n), dtype=np.float64)
    for edge in record["edges"]:
        src, dst = edge["from"], edge["to"]
        adjacency[dst, src] = edge["weight"]
        if edge["bidirectional"]:
            adjacency[src, dst] = edge["weight"]

    return GraphInstance(
        doc_a=doc_a["id"],
        doc_b=doc_b["id"],
        variant=record["variant"],
        tokens_a=tokens_a,
        tokens_b=tokens_b,
        adjacency=adjacency,
        sentence_tokens=[s for doc in docs for s in sent_tokens[doc["id"]]],
    )


def load_pairs(path: str | Path) -> list[tuple[str, str, int]]:
    """Read the pair JSON emitted by the graph pipeline."""
    entries = json.loads(Path(path).read_text(encoding="utf-8"))
    return [(e["a"], e["b"], int(e["label"])) for e in entries]


def graph_path(graph_dir: str | Path, a: str, b: str, variant: str) -> Path:
    return Path(graph_dir) / f"{a}__{b}.{variant}.json"
