"""Dominant direction deduction: pseudograph, SGS, HP, and the merge step."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cig import ConceptGraph, build_cig, build_jcig
from .config import PipelineParams
from .corpus import Document
from .errors import ValidationError
from .textstats import TfIdfVector, cosine


@dataclass(frozen=True)
class DirectionPseudograph:
    """Directed unweighted multigraph of consecutive-sentence concept flow."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # multiset; no self-loops


@dataclass(frozen=True)
class DominantEdge:
    src: int
    dst: int
    bidirectional: bool = False
    support: int = 0  # parallel pseudograph edges behind this direction
    hp_weight: float = 0.0  # collapsed tournament weight (HP only)
    completion: bool = False  # added only to complete the tournament (HP)


@dataclass(frozen=True)
class SeqEdge:
    src: int
    dst: int
    weight: float  # adopted from the source CIG/JCIG edge
    bidirectional: bool = False


@dataclass(frozen=True)
class SeqGraph:
    graph: ConceptGraph  # source JCIG (vertices, assignments, weights)
    variant: str
    edges: tuple[SeqEdge, ...]
    completion_edge_count: int = 0

    @property
    def provenance(self) -> tuple[str, ...]:
        return tuple(doc.id for doc in self.graph.documents)


def build_pseudograph(graph: ConceptGraph, doc: Document) -> DirectionPseudograph:
    """One directed edge per concept pair across each consecutive sentence pair."""
    if (doc.id, 0) not in graph.sentence_assignment and doc.sentences:
        raise ValidationError(f"document {doc.id!r} is not assigned in this graph")
    edges = []
    for i in range(len(doc.sentences) - 1):
        here = sorted(graph.sentence_assignment[(doc.id, i)])
        there = sorted(graph.sentence_assignment[(doc.id, i + 1)])
        for m in here:
            for n in there:
                if m != n:
                    edges.append((m, n))
    vertices = tuple(c.id for c in graph.vertices)
    return DirectionPseudograph(vertices, tuple(edges))


def union_pseudographs(
    a: DirectionPseudograph, b: DirectionPseudograph
) -> DirectionPseudograph:
    if a.vertices != b.vertices:
        raise ValidationError("pseudographs must share a vertex set to union")
    return DirectionPseudograph(a.vertices, a.edges + b.edges)


def sgs_reduce(pg: DirectionPseudograph) -> frozenset[DominantEdge]:
    """Keep the majority direction per vertex pair; ties become bidirectional."""
    counts = Counter(pg.edges)
    pairs = sorted(
        {(min(m, n), max(m, n)) for m, n in counts},
        key=lambda p: (-(counts[p] + counts[(p[1], p[0])]), p),
    )
    dominant = set()
    for u, v in pairs:
        fwd, bwd = counts[(u, v)], counts[(v, u)]
        if fwd > bwd:
            dominant.add(DominantEdge(u, v, support=fwd))
        elif bwd > fwd:
            dominant.add(DominantEdge(v, u, support=bwd))
        else:
            dominant.add(DominantEdge(u, v, bidirectional=True, support=fwd))
    return frozenset(dominant)


def _tournament(
    pg: DirectionPseudograph, vertex_vectors: dict[int, TfIdfVector]
) -> tuple[dict[tuple[int, int], DominantEdge], int]:
    """Collapse parallel edges to count*cosine weights and complete all pairs."""
    counts = Counter(pg.edges)
    edges: dict[tuple[int, int], DominantEdge] = {}
    completion = 0
    verts = sorted(pg.vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            sim = cosine(vertex_vectors[u], vertex_vectors[v])
            w_uv = counts[(u, v)] * sim
            w_vu = counts[(v, u)] * sim
            if counts[(u, v)] == 0 and counts[(v, u)] == 0:
                # no sequence evidence: cosine-weighted completion edge, low id first
                edges[(u, v)] = DominantEdge(u, v, hp_weight=sim, completion=True)
                completion += 1
            elif w_uv >= w_vu:  # weight tie keeps the lower-id source
                edges[(u, v)] = DominantEdge(
                    u, v, support=counts[(u, v)], hp_weight=w_uv
                )
            else:
                edges[(v, u)] = DominantEdge(
                    v, u, support=counts[(v, u)], hp_weight=w_vu
                )
    return edges, completion


def _hamiltonian_path(verts: list[int], beats) -> list[int]:
    """Insertion ordering: binary search each vertex into a growing path.

    Valid on any tournament: the insertion point always exists because the
    predecessor beats the newcomer and the newcomer beats the successor.
    """
    path: list[int] = []
    for v in verts:
        lo, hi = 0, len(path)
        while lo < hi:
            mid = (lo + hi) // 2
            if beats(path[mid], v):
                lo = mid + 1
            else:
                hi = mid
        path.insert(lo, v)
    return path


def hp_reduce(
    pg: DirectionPseudograph, vertex_vectors: dict[int, TfIdfVector]
) -> tuple[list[int], frozenset[DominantEdge], int]:
    """Reduce to the n-1 edges of a Hamiltonian path of the completed tournament."""
    edges, completion = _tournament(pg, vertex_vectors)
    verts = sorted(pg.vertices)
    path = _hamiltonian_path(verts, lambda u, v: (u, v) in edges)
    kept = frozenset(edges[(u, v)] for u, v in zip(path, path[1:]))
    return path, kept, completion


def merge_directions(
    graph: ConceptGraph,
    dominant: frozenset[DominantEdge],
    variant: str,
    completion_edge_count: int = 0,
) -> SeqGraph:
    """Intersect dominant directions with graph edges; weights come from the graph."""
    vertex_ids = {c.id for c in graph.vertices}
    seq_edges = []
    for de in sorted(dominant, key=lambda d: (d.src, d.dst)):
        if de.src not in vertex_ids or de.dst not in vertex_ids:
            raise ValidationError("dominant edge references unknown vertex")
        key = (min(de.src, de.dst), max(de.src, de.dst))
        if key in graph.edges:
            seq_edges.append(
                SeqEdge(de.src, de.dst, graph.edges[key], de.bidirectional)
            )
    return SeqGraph(graph, variant, tuple(seq_edges), completion_edge_count)


def _combine_individual(
    jcig: ConceptGraph,
    seq_cigs: list[SeqGraph],
    variant: str,
    completion_edge_count: int,
) -> SeqGraph:
    """Combine per-document Seq CIGs over the merged JCIG vertex set.

    Directions carry over through keyword-set identity; JCIG edges between
    vertices never co-resident in one document become bidirectional; JCIG
    weights are adopted throughout.
    """
    by_keywords = {}
    for c in jcig.vertices:
        by_keywords[(c.keywords, c.is_dummy)] = c.id
    doc_members: list[set[int]] = []
    directions: dict[tuple[int, int], set[tuple[int, int]]] = {}
    bidir_pairs: set[tuple[int, int]] = set()
    for seq_cig in seq_cigs:
        remap = {
            c.id: by_keywords[(c.keywords, c.is_dummy)]
            for c in seq_cig.graph.vertices
        }
        doc_members.append(set(remap.values()))
        for e in seq_cig.edges:
            src, dst = remap[e.src], remap[e.dst]
            key = (min(src, dst), max(src, dst))
            directions.setdefault(key, set()).add((src, dst))
            if e.bidirectional:
                bidir_pairs.add(key)
    seq_edges = []
    for (u, v), weight in sorted(jcig.edges.items()):
        key = (u, v)
        if key in directions:
            dirs = directions[key]
            if len(dirs) > 1 or key in bidir_pairs:
                seq_edges.append(SeqEdge(u, v, weight, bidirectional=True))
            else:
                src, dst = next(iter(dirs))
                seq_edges.append(SeqEdge(src, dst, weight))
        elif not any(u in mem and v in mem for mem in doc_members):
            # cross-document pair: no sequence evidence can exist
            seq_edges.append(SeqEdge(u, v, weight, bidirectional=True))
    return SeqGraph(jcig, variant, tuple(seq_edges), completion_edge_count)


def build_seq_jcig(
    doc_a: Document,
    doc_b: Document,
    variant: str = "c_hp",
    params: PipelineParams | None = None,
) -> SeqGraph:
    """End-to-end construction of the (Seq) JCIG for a document pair."""
    params = (params or PipelineParams()).replace(variant=variant)
    if variant == "undirected":
        jcig = build_jcig(doc_a, doc_b, params)
        edges = tuple(
            SeqEdge(u, v, w, bidirectional=True)
            for (u, v), w in sorted(jcig.edges.items())
        )
        return SeqGraph(jcig, variant, edges)
    if variant in ("c_sgs", "c_hp"):
        jcig = build_jcig(doc_a, doc_b, params)
        pg = union_pseudographs(
            build_pseudograph(jcig, doc_a), build_pseudograph(jcig, doc_b)
        )
        if variant == "c_sgs":
            dominant, completion = sgs_reduce(pg), 0
        else:
            _, dominant, completion = hp_reduce(pg, dict(jcig.vertex_vectors))
        return merge_directions(jcig, dominant, variant, completion)
    if variant in ("i_sgs", "i_hp"):
        jcig = build_jcig(doc_a, doc_b, params)
        completion_total = 0
        seq_cigs = []
        for doc in (doc_a, doc_b):
            cig = build_cig(doc, params)
            pg = build_pseudograph(cig, doc)
            if variant == "i_sgs":
                dominant, completion = sgs_reduce(pg), 0
            else:
                _, dominant, completion = hp_reduce(pg, dict(cig.vertex_vectors))
            completion_total += completion
            seq_cigs.append(merge_directions(cig, dominant, variant, completion))
        return _combine_individual(jcig, seq_cigs, variant, completion_total)
    raise ValidationError(f"unknown variant {variant!r}")
