"""TextRank keyword extraction: co-occurrence graph + PageRank + top-k."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import Document
from .errors import ValidationError
from .stopwords import STOPWORDS


@dataclass(frozen=True)
class CooccurrenceGraph:
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]  # unordered pairs stored as sorted tuples


@dataclass(frozen=True)
class KeywordSet:
    entries: tuple[tuple[str, float], ...]  # descending score, lexicographic tie-break

    @property
    def keywords(self) -> tuple[str, ...]:
        return tuple(kw for kw, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def filtered_sentence_tokens(doc: Document) -> list[list[str]]:
    """Per-sentence token streams with stopwords removed."""
    return [[t for t in s.tokens if t not in STOPWORDS] for s in doc.sentences]


def build_cooccurrence_graph(doc: Document, window: int = 3) -> CooccurrenceGraph:
    """Nodes are non-stopword tokens; edges link tokens within the sliding window.

    Windowing runs over the stopword-filtered token stream of each sentence.
    """
    if window < 2:
        raise ValidationError(f"window must be >= 2, got {window}")
    nodes = set()
    edges = set()
    for tokens in filtered_sentence_tokens(doc):
        nodes.update(tokens)
        for i, u in enumerate(tokens):
            for v in tokens[i + 1 : i + window]:
                if u != v:
                    edges.add((u, v) if u < v else (v, u))
    return CooccurrenceGraph(frozenset(nodes), frozenset(edges))


def pagerank(
    g: CooccurrenceGraph,
    damping: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 100,
) -> dict[str, float]:
    """Power iteration over the undirected graph; dangling rank spreads uniformly."""
    if not g.nodes:
        raise ValidationError("pagerank requires a non-empty graph")
    nodes = sorted(g.nodes)
    idx = {n: i for i, n in enumerate(nodes)}
    n = len(nodes)
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        neighbors[idx[u]].append(idx[v])
        neighbors[idx[v]].append(idx[u])
    degree = np.array([len(nb) for nb in neighbors], dtype=float)
    p = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        share = np.where(degree > 0, p / np.maximum(degree, 1.0), 0.0)
        contrib = np.zeros(n)
        for i, nb in enumerate(neighbors):
            for j in nb:
                contrib[i] += share[j]
        dangling = p[degree == 0].sum()
        new_p = (1.0 - damping) / n + damping * (contrib + dangling / n)
        if np.abs(new_p - p).sum() < tol:
            p = new_p
            break
        p = new_p
    return {node: float(p[idx[node]]) for node in nodes}


def default_top_k(n_filtered_tokens: int) -> int:
    return max(5, math.ceil(0.15 * n_filtered_tokens))


def extract_keywords(
    doc: Document,
    top_k: int | None = None,
    window: int = 3,
    damping: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 100,
) -> KeywordSet:
    """Top-k co-occurrence-graph nodes by PageRank score."""
    graph = build_cooccurrence_graph(doc, window)
    if not graph.nodes:
        return KeywordSet(())
    if top_k is None:
        n_tokens = sum(len(ts) for ts in filtered_sentence_tokens(doc))
        top_k = default_top_k(n_tokens)
    scores = pagerank(graph, damping, tol, max_iter)
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return KeywordSet(tuple(ranked[:top_k]))
