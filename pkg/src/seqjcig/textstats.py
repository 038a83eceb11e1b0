"""TF-IDF vectors over token bags and cosine similarity."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ValidationError


@dataclass(frozen=True)
class Vocabulary:
    index: Mapping[str, int]
    doc_freq: Mapping[str, int]
    n_docs: int


@dataclass(frozen=True)
class TfIdfVector:
    weights: Mapping[int, float]  # sparse: zero entries absent
    norm: float


def build_vocabulary(units: list[Iterable[str]]) -> Vocabulary:
    """Index every term seen in the units; doc_freq counts containing units."""
    if not units:
        raise ValidationError("cannot build vocabulary from an empty unit list")
    df: Counter[str] = Counter()
    for bag in units:
        df.update(set(bag))
    index = {term: i for i, term in enumerate(sorted(df))}
    return Vocabulary(index, dict(df), len(units))


def tfidf(bag: Iterable[str], vocab: Vocabulary) -> TfIdfVector:
    """Raw term frequency times smoothed IDF: tf * (1 + ln((1+N)/(1+df)))."""
    counts = Counter(t for t in bag if t in vocab.index)
    weights = {}
    for term, tf in counts.items():
        idf = 1.0 + math.log((1 + vocab.n_docs) / (1 + vocab.doc_freq[term]))
        weights[vocab.index[term]] = tf * idf
    norm = math.sqrt(sum(w * w for w in weights.values()))
    return TfIdfVector(weights, norm)


def cosine(u: TfIdfVector, v: TfIdfVector) -> float:
    """Cosine similarity; 0.0 whenever either vector has zero norm."""
    if u.norm == 0.0 or v.norm == 0.0:
        return 0.0
    small, big = (u, v) if len(u.weights) <= len(v.weights) else (v, u)
    dot = sum(w * big.weights.get(i, 0.0) for i, w in small.weights.items())
    return dot / (u.norm * v.norm)
