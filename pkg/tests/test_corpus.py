import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqjcig.corpus import (
    Document,
    generate_pairs,
    load_corpus,
    split_sentences,
    tokenize,
)
from seqjcig.errors import ValidationError

from conftest import make_doc


class TestSplitSentences:
    def test_basic_split(self):
        assert split_sentences("A. B.") == ["A.", "B."]

    def test_abbreviation_suppression(self):
        assert split_sentences("See fig. 2. Done.") == ["See fig. 2.", "Done."]

    def test_empty(self):
        assert split_sentences("") == []

    def test_exclamation_and_question(self):
        assert split_sentences("Stop! Why? Go.") == ["Stop!", "Why?", "Go."]

    def test_no_trailing_punctuation(self):
        assert split_sentences("First one. second has no dot") == [
            "First one.",
            "second has no dot",
        ]

    def test_internal_period_without_space(self):
        assert split_sentences("Version 1.2 works. Yes.") == [
            "Version 1.2 works.",
            "Yes.",
        ]


class TestTokenize:
    def test_hyphens_preserved(self):
        assert tokenize("Re-attach the Top-Cover!") == ["re-attach", "the", "top-cover"]

    def test_lowercase(self):
        assert tokenize("ABC") == ["abc"]

    def test_punctuation_only(self):
        assert tokenize("...") == []

    def test_apostrophe(self):
        assert tokenize("don't touch") == ["don't", "touch"]

    @given(st.text(max_size=200))
    def test_idempotence(self, text):
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


class TestLoadCorpus:
    def _write_manifest(self, tmp_path, records):
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps(records), encoding="utf-8")
        return path

    def test_two_records(self, tmp_path):
        path = self._write_manifest(
            tmp_path,
            [
                {"id": "d1", "subject": "s", "tags": [], "text": "One. Two."},
                {"id": "d2", "subject": "s", "tags": [], "text": "Three."},
            ],
        )
        docs = load_corpus(path)
        assert [d.id for d in docs] == ["d1", "d2"]
        assert all(d.sentences for d in docs)

    def test_hand_tokenization(self, tmp_path):
        path = self._write_manifest(
            tmp_path,
            [
                {
                    "id": "d",
                    "subject": "s",
                    "tags": [],
                    "text": "Unlock the right hook. Lift the left pin.",
                }
            ],
        )
        (doc,) = load_corpus(path)
        assert len(doc.sentences) == 2
        assert list(doc.sentences[0].tokens) == ["unlock", "the", "right", "hook"]
        assert list(doc.sentences[1].tokens) == ["lift", "the", "left", "pin"]

    def test_empty_text_rejected(self, tmp_path):
        path = self._write_manifest(
            tmp_path, [{"id": "bad", "subject": "s", "tags": [], "text": " "}]
        )
        with pytest.raises(ValidationError, match="bad"):
            load_corpus(path)

    def test_duplicate_id_rejected(self, tmp_path):
        path = self._write_manifest(
            tmp_path,
            [
                {"id": "d", "subject": "s", "tags": [], "text": "A."},
                {"id": "d", "subject": "s", "tags": [], "text": "B."},
            ],
        )
        with pytest.raises(ValidationError, match="duplicate"):
            load_corpus(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_corpus(tmp_path / "nope.json")

    def test_text_path_indirection(self, tmp_path):
        (tmp_path / "doc.txt").write_text("From a file.", encoding="utf-8")
        path = self._write_manifest(
            tmp_path,
            [{"id": "d", "subject": "s", "tags": [], "text_path": "doc.txt"}],
        )
        (doc,) = load_corpus(path)
        assert doc.raw_text == "From a file."

    def test_directory_argument(self, tmp_path):
        self._write_manifest(
            tmp_path, [{"id": "d", "subject": "s", "tags": [], "text": "A."}]
        )
        assert len(load_corpus(tmp_path)) == 1


def _pair_corpus():
    return [
        make_doc("a", ["Fix the filter."], subject="fridge", tags=("a", "b", "c")),
        make_doc("b", ["Fix the filter again."], subject="fridge", tags=("b", "c", "d")),
        make_doc("c", ["Wash the drum."], subject="washer", tags=("b", "c")),
        make_doc("d", ["Spin the drum."], subject="washer", tags=("x", "y")),
    ]


class TestGeneratePairs:
    def test_two_common_tags_is_positive(self):
        docs = _pair_corpus()[:2]
        pairs = generate_pairs(docs, negative_ratio=0.0, seed=1)
        assert [(p.doc_a_id, p.doc_b_id, p.label) for p in pairs] == [("a", "b", 1)]

    def test_one_common_tag_is_not_positive(self):
        docs = [
            make_doc("a", ["X."], subject="s", tags=("a", "b")),
            make_doc("b", ["Y."], subject="s", tags=("b", "c")),
        ]
        with pytest.warns(UserWarning):
            assert generate_pairs(docs, seed=1) == []

    def test_determinism(self):
        docs = _pair_corpus()
        assert generate_pairs(docs, 1.0, seed=7) == generate_pairs(docs, 1.0, seed=7)

    def test_negative_subjects_differ(self):
        for pair in generate_pairs(_pair_corpus(), 1.0, seed=3):
            docs = {d.id: d for d in _pair_corpus()}
            a, b = docs[pair.doc_a_id], docs[pair.doc_b_id]
            if pair.label == 1:
                assert a.subject == b.subject and len(a.tags & b.tags) >= 2
            else:
                assert a.subject != b.subject

    def test_no_mirrored_pairs(self):
        pairs = generate_pairs(_pair_corpus(), 1.0, seed=3)
        unordered = [frozenset((p.doc_a_id, p.doc_b_id)) for p in pairs]
        assert len(unordered) == len(set(unordered))

    def test_small_corpus_rejected(self):
        with pytest.raises(ValidationError):
            generate_pairs(_pair_corpus()[:1])
