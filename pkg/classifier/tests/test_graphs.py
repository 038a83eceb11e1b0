import numpy as np
import pytest

from seqjcig_classifier.graphs import (
    GraphSchemaError,
    graph_from_record,
    graph_path,
    load_graph,
    load_pairs,
)

from conftest import toy_record, write_record


def test_tokens_follow_assignment_and_document_order(record):
    g = graph_from_record(record)
    assert g.n_vertices == 3
    # vertex 0 holds doc-a sentences 0 and 1 concatenated in order
    assert g.tokens_a[0] == [
        "loosen", "the", "screw", "on", "the", "panel",
        "lift", "the", "panel", "away",
    ]
    assert g.tokens_b[0] == ["remove", "the", "screw", "first"]
    # dummy vertex has no sentences on either side
    assert g.tokens_a[2] == [] and g.tokens_b[2] == []


def test_adjacency_weights_and_bidirectional_expansion(record):
    g = graph_from_record(record)
    expected = np.zeros((3, 3))
    expected[1, 0] = 0.4  # directed 0 -> 1
    expected[2, 1] = 0.1  # bidirectional 1 <-> 2
    expected[1, 2] = 0.1
    np.testing.assert_array_equal(g.adjacency, expected)


def test_sentence_tokens_cover_both_documents(record):
    g = graph_from_record(record)
    assert len(g.sentence_tokens) == 5
    assert ["unplug", "the", "cable"] in g.sentence_tokens


def test_unsupported_schema_rejected(tmp_path, record):
    record["schema_version"] = 2
    path = write_record(tmp_path / "bad.json", record)
    with pytest.raises(GraphSchemaError):
        load_graph(path)


def test_unreadable_file_rejected(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(GraphSchemaError):
        load_graph(path)


def test_sparse_vertex_ids_rejected(record):
    record["vertices"][1]["id"] = 5
    with pytest.raises(GraphSchemaError):
        graph_from_record(record)


def test_load_pairs_and_graph_path(tmp_path):
    pairs = tmp_path / "pairs.json"
    pairs.write_text('[{"a": "x", "b": "y", "label": 1}]', encoding="utf-8")
    assert load_pairs(pairs) == [("x", "y", 1)]
    assert graph_path(tmp_path, "x", "y", "c_hp").name == "x__y.c_hp.json"


def test_round_trip_through_file(tmp_path, record):
    path = write_record(tmp_path / "g.json", record)
    g = load_graph(path)
    assert g.doc_a == "doc-a" and g.doc_b == "doc-b"
    assert g.variant == "c_hp"
