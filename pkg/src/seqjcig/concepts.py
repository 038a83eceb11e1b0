"""Keyword graph construction and community detection into concepts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx
from networkx.algorithms import community as nx_community

from .corpus import Document
from .errors import ValidationError
from .keywords import KeywordSet

COMMUNITY_ALGORITHMS = ("louvain", "greedy_modularity")

_LOUVAIN_RESTARTS = 8
_EXACT_LIMIT = 10


@dataclass(frozen=True)
class KeywordGraph:
    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]  # sorted tuples, no self-loops


@dataclass(frozen=True)
class Concept:
    id: int
    keywords: frozenset[str]
    is_dummy: bool = False


def build_keyword_graph(keywords: KeywordSet, doc: Document) -> KeywordGraph:
    """Edge between two keywords iff they co-occur in some sentence."""
    kw_set = set(keywords.keywords)
    edges = set()
    for sentence in doc.sentences:
        present = sorted(kw_set.intersection(sentence.tokens))
        for i, u in enumerate(present):
            for v in present[i + 1 :]:
                edges.add((u, v))
    return KeywordGraph(frozenset(kw_set), frozenset(edges))


def _to_nx(g: KeywordGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(sorted(g.nodes))
    G.add_edges_from(sorted(g.edges))
    return G


def detect_communities(
    g: KeywordGraph, algorithm: str = "louvain", seed: int = 0
) -> list[Concept]:
    """Partition keywords into concept communities.

    Isolated keywords become singleton concepts. Concepts are id'd densely in
    sorted-keyword order for determinism.
    """
    if algorithm not in COMMUNITY_ALGORITHMS:
        raise ValidationError(f"unknown community algorithm {algorithm!r}")
    if not g.nodes:
        return []
    G = _to_nx(g)
    if algorithm == "louvain" and len(g.nodes) <= _EXACT_LIMIT:
        # tiny graphs: exhaustive modularity maximization is affordable and
        # sidesteps louvain's local optima
        parts = _exact_partition(g)
    elif algorithm == "louvain":
        # Louvain is a randomized heuristic; a handful of seeded restarts keeps
        # it deterministic while reliably landing near the optimal partition.
        best = None
        best_q = float("-inf")
        for restart in range(_LOUVAIN_RESTARTS):
            candidate = [
                frozenset(p)
                for p in nx_community.louvain_communities(
                    G, resolution=1.0, seed=seed + restart
                )
            ]
            q = _partition_modularity(g, candidate)
            if q > best_q + 1e-12:
                best, best_q = candidate, q
        parts = _refine(g, best)
    else:
        parts = [frozenset(p) for p in nx_community.greedy_modularity_communities(G)]
    # isolated keywords always stand alone (modularity is indifferent to them)
    connected = {n for edge in g.edges for n in edge}
    isolated = g.nodes - connected
    if isolated:
        parts = [p & connected for p in parts]
        parts = [p for p in parts if p] + [frozenset({n}) for n in sorted(isolated)]
    # Guard: never return a partition worse than the trivial single community.
    if g.edges and _partition_modularity(g, parts) < 0.0:
        parts = [frozenset(g.nodes)]
    parts.sort(key=lambda p: min(p))
    return [Concept(i, p) for i, p in enumerate(parts)]


def _exact_partition(g: KeywordGraph) -> list[frozenset[str]]:
    """Maximum-modularity partition by exhaustive set-partition enumeration."""
    nodes = sorted(g.nodes)
    best_parts: list[list[str]] = [nodes]
    best_q = float("-inf")

    def walk(remaining: list[str], parts: list[list[str]]):
        nonlocal best_parts, best_q
        if not remaining:
            q = _partition_modularity(g, [frozenset(p) for p in parts])
            if q > best_q + 1e-12:
                best_parts, best_q = [list(p) for p in parts], q
            return
        head, rest = remaining[0], remaining[1:]
        for part in parts:
            part.append(head)
            walk(rest, parts)
            part.pop()
        parts.append([head])
        walk(rest, parts)
        parts.pop()

    walk(nodes, [])
    return [frozenset(p) for p in best_parts]


def _refine(g: KeywordGraph, parts: list[frozenset[str]]) -> list[frozenset[str]]:
    """Greedy single-node moves until modularity stops improving."""
    groups = [set(p) for p in parts]
    improved = True
    guard = 0
    while improved and guard < 50:
        improved = False
        guard += 1
        current_q = _partition_modularity(g, [frozenset(p) for p in groups if p])
        for node in sorted(g.nodes):
            home = next(i for i, p in enumerate(groups) if node in p)
            best_q, best_target = current_q, home
            for target in range(len(groups) + 1):
                if target == home:
                    continue
                groups[home].discard(node)
                if target == len(groups):
                    trial = groups + [{node}]
                else:
                    groups[target].add(node)
                    trial = groups
                q = _partition_modularity(g, [frozenset(p) for p in trial if p])
                if target < len(groups):
                    groups[target].discard(node)
                groups[home].add(node)
                if q > best_q + 1e-12:
                    best_q, best_target = q, target
            if best_target != home:
                groups[home].discard(node)
                if best_target == len(groups):
                    groups.append({node})
                else:
                    groups[best_target].add(node)
                current_q = best_q
                improved = True
        # pairwise community merges escape local optima node moves cannot
        groups = [p for p in groups if p]
        merged = True
        while merged:
            merged = False
            current_q = _partition_modularity(g, [frozenset(p) for p in groups])
            for i, j in itertools.combinations(range(len(groups)), 2):
                trial = [
                    p for k, p in enumerate(groups) if k not in (i, j)
                ] + [groups[i] | groups[j]]
                q = _partition_modularity(g, [frozenset(p) for p in trial])
                if q > current_q + 1e-12:
                    groups = trial
                    merged = True
                    improved = True
                    break
    return [frozenset(p) for p in groups if p]


def _partition_modularity(g: KeywordGraph, parts: list[frozenset[str]]) -> float:
    m = len(g.edges)
    if m == 0:
        return 0.0
    membership = {}
    for ci, part in enumerate(parts):
        for node in part:
            membership[node] = ci
    intra = [0] * len(parts)
    degree_sum = [0] * len(parts)
    for u, v in g.edges:
        if membership[u] == membership[v]:
            intra[membership[u]] += 1
        degree_sum[membership[u]] += 1
        degree_sum[membership[v]] += 1
    return sum(
        e / m - (d / (2.0 * m)) ** 2 for e, d in zip(intra, degree_sum)
    )


def modularity(g: KeywordGraph, partition: list[Concept]) -> float:
    """Newman modularity Q of a concept partition over the keyword graph."""
    covered: set[str] = set()
    total = 0
    for concept in partition:
        covered.update(concept.keywords)
        total += len(concept.keywords)
    if covered != set(g.nodes) or total != len(g.nodes):
        raise ValidationError("partition must cover every node exactly once")
    return _partition_modularity(g, [c.keywords for c in partition])
