import random

import pytest

from seqjcig.errors import ValidationError
from seqjcig.keywords import (
    CooccurrenceGraph,
    build_cooccurrence_graph,
    extract_keywords,
    pagerank,
)

from conftest import make_doc


def graph_of(edges, extra_nodes=()):
    nodes = set(extra_nodes)
    norm = set()
    for u, v in edges:
        nodes.update((u, v))
        norm.add((u, v) if u < v else (v, u))
    return CooccurrenceGraph(frozenset(nodes), frozenset(norm))


def reference_pagerank(g, damping=0.85, iters=5000):
    """Independent brute-force iteration oracle (plain dicts, no numpy)."""
    nodes = sorted(g.nodes)
    nbrs = {n: [] for n in nodes}
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    n = len(nodes)
    p = {u: 1.0 / n for u in nodes}
    for _ in range(iters):
        dangling = sum(p[u] for u in nodes if not nbrs[u])
        new = {}
        for u in nodes:
            incoming = sum(p[v] / len(nbrs[v]) for v in nbrs[u])
            new[u] = (1 - damping) / n + damping * (incoming + dangling / n)
        p = new
    return p


class TestCooccurrenceGraph:
    def test_adjacent_pair(self):
        doc = make_doc("d", ["hook pin."])
        g = build_cooccurrence_graph(doc, window=2)
        assert g.edges == frozenset({("hook", "pin")})

    def test_stopword_bridging(self):
        # "the" is filtered, so hook and pin become adjacent in the stream
        doc = make_doc("d", ["hook the pin."])
        g = build_cooccurrence_graph(doc, window=2)
        assert g.edges == frozenset({("hook", "pin")})

    def test_single_token(self):
        g = build_cooccurrence_graph(make_doc("d", ["hook."]), window=3)
        assert g.nodes == frozenset({"hook"}) and not g.edges

    def test_window_respected(self):
        doc = make_doc("d", ["hook pin socket."])
        g = build_cooccurrence_graph(doc, window=2)
        assert ("hook", "socket") not in g.edges

    def test_no_cross_sentence_edges(self):
        doc = make_doc("d", ["hook.", "pin."])
        g = build_cooccurrence_graph(doc, window=3)
        assert not g.edges

    def test_small_window_rejected(self):
        with pytest.raises(ValidationError):
            build_cooccurrence_graph(make_doc("d", ["hook pin."]), window=1)


class TestPagerank:
    def test_triangle_uniform(self):
        g = graph_of([("a", "b"), ("b", "c"), ("a", "c")])
        scores = pagerank(g)
        for s in scores.values():
            assert s == pytest.approx(1 / 3, abs=1e-6)

    def test_path_analytic_fixed_point(self):
        # solving the 3-node equations by hand: ends = 9.5/37, center = 18/37
        g = graph_of([("a", "b"), ("b", "c")])
        scores = pagerank(g, tol=1e-12, max_iter=500)
        assert scores["b"] == pytest.approx(18 / 37, abs=1e-6)
        assert scores["a"] == pytest.approx(9.5 / 37, abs=1e-6)
        assert scores["c"] == pytest.approx(9.5 / 37, abs=1e-6)

    def test_matches_reference_oracle(self):
        g = graph_of([("a", "b"), ("b", "c"), ("c", "d"), ("b", "d")], ["e"])
        scores = pagerank(g, tol=1e-12, max_iter=1000)
        oracle = reference_pagerank(g)
        for node in g.nodes:
            assert scores[node] == pytest.approx(oracle[node], abs=1e-8)

    def test_isolated_nodes_split_evenly(self):
        g = CooccurrenceGraph(frozenset({"a", "b"}), frozenset())
        assert pagerank(g) == {"a": pytest.approx(0.5), "b": pytest.approx(0.5)}

    def test_conservation_on_random_graphs(self):
        for seed in range(5):
            r = random.Random(seed)
            n = r.randint(2, 500)
            nodes = [f"n{i}" for i in range(n)]
            edges = {
                tuple(sorted(r.sample(nodes, 2))) for _ in range(r.randint(0, 3 * n))
            }
            g = CooccurrenceGraph(frozenset(nodes), frozenset(edges))
            assert sum(pagerank(g).values()) == pytest.approx(1.0, abs=1e-9)

    def test_uniform_on_cycle_and_clique(self):
        n = 9
        cycle = graph_of([(f"n{i}", f"n{(i + 1) % n}") for i in range(n)])
        clique = graph_of(
            [(f"n{i}", f"n{j}") for i in range(n) for j in range(i + 1, n)]
        )
        for g in (cycle, clique):
            for score in pagerank(g, tol=1e-12, max_iter=500).values():
                assert score == pytest.approx(1 / n, abs=1e-6)

    def test_empty_graph_rejected(self):
        with pytest.raises(ValidationError):
            pagerank(CooccurrenceGraph(frozenset(), frozenset()))


class TestExtractKeywords:
    def test_star_center_ranked_first(self):
        doc = make_doc(
            "d",
            [
                "filter housing.",
                "filter cap.",
                "filter tube.",
                "filter grille.",
            ],
        )
        ks = extract_keywords(doc, top_k=5, window=2)
        assert ks.keywords[0] == "filter"

    def test_top_k_overflow_returns_all(self):
        doc = make_doc("d", ["hook pin."])
        assert len(extract_keywords(doc, top_k=50)) == 2

    def test_lexicographic_tie_break(self):
        doc = make_doc("d", ["zeta alpha."])
        ks = extract_keywords(doc, top_k=2, window=2)
        assert ks.keywords == ("alpha", "zeta")

    def test_stopword_only_document(self):
        doc = make_doc("d", ["the of and."])
        assert len(extract_keywords(doc)) == 0

    def test_determinism(self):
        doc = make_doc("d", ["filter housing cap.", "filter tube grille."])
        assert extract_keywords(doc) == extract_keywords(doc)

    def test_outputs_are_non_stopword_tokens(self):
        doc = make_doc("d", ["remove the filter from the housing."])
        allowed = {"remove", "filter", "housing"}
        assert set(extract_keywords(doc).keywords) <= allowed
