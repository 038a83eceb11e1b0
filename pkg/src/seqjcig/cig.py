"""Concept interaction graphs for single documents (CIG) and pairs (JCIG).

Sentences are matched to concept vertices by TF-IDF cosine against the
concept's keyword bag, then every vertex is re-represented by the TF-IDF
vector of the tokens of its assigned sentences.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .concepts import Concept, build_keyword_graph, detect_communities
from .config import PipelineParams
from .corpus import Document
from .errors import ValidationError
from .keywords import extract_keywords, filtered_sentence_tokens
from .textstats import TfIdfVector, build_vocabulary, cosine, tfidf

SentenceKey = tuple[str, int]  # (doc_id, sentence index)


@dataclass(frozen=True)
class ConceptGraph:
    kind: str  # "cig" | "jcig"
    documents: tuple[Document, ...]
    vertices: tuple[Concept, ...]  # dummy is always the last vertex
    sentence_assignment: Mapping[SentenceKey, frozenset[int]]
    vertex_vectors: Mapping[int, TfIdfVector]
    edges: Mapping[tuple[int, int], float]  # (u, v) with u < v

    @property
    def dummy_id(self) -> int:
        return self.vertices[-1].id

    def vertex_sentences(self, vertex_id: int) -> dict[str, list[int]]:
        """Per-document sorted sentence indices assigned to a vertex."""
        out: dict[str, list[int]] = {doc.id: [] for doc in self.documents}
        for (doc_id, idx), assigned in self.sentence_assignment.items():
            if vertex_id in assigned:
                out[doc_id].append(idx)
        for indices in out.values():
            indices.sort()
        return out


def assign_sentences(
    docs: list[Document],
    concepts: list[Concept],
    sim_thresh: float,
) -> tuple[dict[SentenceKey, frozenset[int]], dict[int, TfIdfVector]]:
    """Two-phase sentence assignment.

    Phase 1 scores each sentence against every concept's keyword-bag vector
    and assigns it to all concepts at or above ``sim_thresh`` (zero-similarity
    matches never count); unmatched sentences go to the dummy alone. Phase 2
    recomputes vertex vectors from the tokens of the assigned sentences.
    """
    dummies = [c for c in concepts if c.is_dummy]
    if len(dummies) != 1:
        raise ValidationError("concepts must include exactly one dummy vertex")
    dummy_id = dummies[0].id

    sentence_bags: dict[SentenceKey, list[str]] = {}
    for doc in docs:
        for sentence, bag in zip(doc.sentences, filtered_sentence_tokens(doc)):
            sentence_bags[(doc.id, sentence.index)] = bag
    vocab = build_vocabulary(list(sentence_bags.values()) or [[]])

    seed_vectors = {
        c.id: tfidf(sorted(c.keywords), vocab) for c in concepts if not c.is_dummy
    }
    assignment: dict[SentenceKey, frozenset[int]] = {}
    for key, bag in sentence_bags.items():
        vec = tfidf(bag, vocab)
        matched = {
            cid
            for cid, cvec in seed_vectors.items()
            if (sim := cosine(vec, cvec)) > 0.0 and sim >= sim_thresh
        }
        assignment[key] = frozenset(matched) if matched else frozenset({dummy_id})

    vertex_bags: dict[int, list[str]] = {c.id: [] for c in concepts}
    for key in sorted(sentence_bags):
        for cid in assignment[key]:
            vertex_bags[cid].extend(sentence_bags[key])
    vertex_vectors = {cid: tfidf(bag, vocab) for cid, bag in vertex_bags.items()}
    return assignment, vertex_vectors


def _doc_concepts(doc: Document, params: PipelineParams) -> list[frozenset[str]]:
    keywords = extract_keywords(
        doc,
        top_k=params.top_k,
        window=params.window,
        damping=params.damping,
        tol=params.pagerank_tol,
        max_iter=params.max_iter,
    )
    kg = build_keyword_graph(keywords, doc)
    concepts = detect_communities(
        kg, params.community_algorithm, params.community_seed
    )
    return [c.keywords for c in concepts]


def _finalize(
    kind: str,
    docs: list[Document],
    keyword_sets: list[frozenset[str]],
    params: PipelineParams,
) -> ConceptGraph:
    ordered = sorted(set(keyword_sets), key=lambda ks: tuple(sorted(ks)))
    concepts = [Concept(i, ks) for i, ks in enumerate(ordered)]
    concepts.append(Concept(len(concepts), frozenset(), is_dummy=True))
    assignment, vectors = assign_sentences(docs, concepts, params.sim_thresh)
    edges: dict[tuple[int, int], float] = {}
    for i, u in enumerate(concepts):
        for v in concepts[i + 1 :]:
            w = cosine(vectors[u.id], vectors[v.id])
            if w > 0.0 and w >= params.w_thresh:
                edges[(u.id, v.id)] = w
    return ConceptGraph(
        kind, tuple(docs), tuple(concepts), assignment, vectors, edges
    )


def build_cig(doc: Document, params: PipelineParams | None = None) -> ConceptGraph:
    """Undirected weighted concept graph of a single document."""
    if not doc.sentences:
        raise ValidationError(f"document {doc.id!r} has no sentences")
    params = params or PipelineParams()
    return _finalize("cig", [doc], _doc_concepts(doc, params), params)


def build_jcig(
    doc_a: Document, doc_b: Document, params: PipelineParams | None = None
) -> ConceptGraph:
    """Joint concept graph of a document pair.

    Concepts with identical keyword sets merge into one vertex; sentence
    assignment and vertex vectors run jointly over both documents.
    """
    if not doc_a.sentences or not doc_b.sentences:
        raise ValidationError("both documents must be non-empty")
    params = params or PipelineParams()
    keyword_sets = _doc_concepts(doc_a, params) + _doc_concepts(doc_b, params)
    return _finalize("jcig", [doc_a, doc_b], keyword_sets, params)
