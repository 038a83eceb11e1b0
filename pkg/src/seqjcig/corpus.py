"""Corpus ingestion: manifest loading, sentence splitting, tokenization, pairing.

The manifest is a UTF-8 JSON array of records with keys ``id``, ``title``,
``subject``, ``tags`` and either inline ``text`` or a ``text_path`` relative
to the manifest file.
"""
from __future__ import annotations

import itertools
import json
import random
import re
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ValidationError

# Abbreviations whose trailing period never ends a sentence.
ABBREVIATIONS = frozenset({"e.g.", "i.e.", "etc.", "fig.", "no."})

_TOKEN_RE = re.compile(r"[a-z0-9]+(?:['-][a-z0-9]+)*")
_BOUNDARY_RE = re.compile(r"[.!?]+")


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    subject: str
    tags: frozenset[str]
    raw_text: str
    sentences: tuple[Sentence, ...]

    @classmethod
    def from_text(cls, id, title, subject, tags, text) -> "Document":
        if not text or not text.strip():
            raise ValidationError(f"document {id!r} has empty text")
        sentences = tuple(
            Sentence(i, s, tuple(tokenize(s)))
            for i, s in enumerate(split_sentences(text))
        )
        return cls(id, title, subject, frozenset(tags), text, sentences)


@dataclass(frozen=True)
class DocumentPair:
    doc_a_id: str
    doc_b_id: str
    label: int  # 1 = similar, 0 = dissimilar


def split_sentences(text: str) -> list[str]:
    """Split text on sentence-final ``.!?`` followed by whitespace or EOT.

    A period preceded by a known abbreviation does not end a sentence.
    """
    sentences = []
    start = 0
    for m in _BOUNDARY_RE.finditer(text):
        end = m.end()
        if end < len(text) and not text[end].isspace():
            continue
        if m.group() == ".":
            prefix = text[: m.start()]
            word = prefix[prefix.rfind(" ") + 1 :].rsplit("\n")[-1]
            if (word + ".").lower() in ABBREVIATIONS:
                continue
        segment = text[start:end].strip()
        if segment:
            sentences.append(segment)
        start = end
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def tokenize(text: str) -> list[str]:
    """Lowercase and split on non-alphanumerics, keeping internal ' and -."""
    return _TOKEN_RE.findall(text.lower())


def load_corpus(path: str | Path) -> list[Document]:
    """Load documents from a manifest file or a directory containing one."""
    path = Path(path)
    manifest = path / "manifest.json" if path.is_dir() else path
    if not manifest.exists():
        raise FileNotFoundError(f"manifest not found: {manifest}")
    records = json.loads(manifest.read_text(encoding="utf-8"))
    if not isinstance(records, list):
        raise ValidationError("manifest must be a JSON array of document records")
    docs = []
    seen = set()
    for rec in records:
        doc_id = rec.get("id")
        if doc_id is None:
            raise ValidationError("document record missing 'id'")
        if doc_id in seen:
            raise ValidationError(f"duplicate document id {doc_id!r}")
        seen.add(doc_id)
        if "subject" not in rec:
            raise ValidationError(f"document {doc_id!r} missing 'subject'")
        if "text" in rec:
            text = rec["text"]
        elif "text_path" in rec:
            text = (manifest.parent / rec["text_path"]).read_text(encoding="utf-8")
        else:
            raise ValidationError(f"document {doc_id!r} has neither text nor text_path")
        docs.append(
            Document.from_text(
                doc_id,
                rec.get("title", doc_id),
                rec["subject"],
                rec.get("tags", []),
                text,
            )
        )
    return docs


def generate_pairs(
    corpus: list[Document], negative_ratio: float = 1.0, seed: int = 0
) -> list[DocumentPair]:
    """Generate labeled pairs: positives share subject and >=2 tags, negatives differ in subject."""
    if len(corpus) < 2:
        raise ValidationError("need at least 2 documents to generate pairs")
    positives = []
    negative_candidates = []
    for a, b in itertools.combinations(corpus, 2):
        if a.subject == b.subject:
            if len(a.tags & b.tags) >= 2:
                positives.append(DocumentPair(a.id, b.id, 1))
        else:
            negative_candidates.append(DocumentPair(a.id, b.id, 0))
    if not positives:
        warnings.warn("no positive pairs in corpus; returning negatives only")
    rng = random.Random(seed)
    n_neg = min(round(negative_ratio * len(positives)), len(negative_candidates))
    negatives = rng.sample(negative_candidates, n_neg) if n_neg > 0 else []
    pairs = positives + negatives
    rng.shuffle(pairs)
    return pairs


def save_pairs(pairs: list[DocumentPair], path: str | Path) -> None:
    data = [{"a": p.doc_a_id, "b": p.doc_b_id, "label": p.label} for p in pairs]
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def load_pairs(path: str | Path) -> list[DocumentPair]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [DocumentPair(d["a"], d["b"], int(d["label"])) for d in data]
