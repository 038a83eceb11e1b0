import random

import pytest

from seqjcig.cig import ConceptGraph
from seqjcig.concepts import Concept
from seqjcig.corpus import Document, Sentence, tokenize
from seqjcig.textstats import TfIdfVector


def make_doc(doc_id, sentences, subject="subject", tags=(), title=None):
    """Build a Document from pre-split sentence strings."""
    sents = tuple(
        Sentence(i, text, tuple(tokenize(text))) for i, text in enumerate(sentences)
    )
    return Document(
        doc_id,
        title or doc_id,
        subject,
        frozenset(tags),
        " ".join(sentences),
        sents,
    )


def random_vector(rng, dim=8):
    weights = {
        i: rng.uniform(0.1, 2.0) for i in range(dim) if rng.random() < 0.6
    }
    norm = sum(w * w for w in weights.values()) ** 0.5
    return TfIdfVector(weights, norm)


def random_concept_graph(rng, n_concepts, n_sent_a=8, n_sent_b=8):
    """Synthetic JCIG-shaped fixture: random assignments, vectors, and edges."""
    concepts = [Concept(i, frozenset({f"k{i}"})) for i in range(n_concepts)]
    dummy = Concept(n_concepts, frozenset(), is_dummy=True)
    vertices = tuple(concepts + [dummy])
    ids = [c.id for c in concepts]

    doc_a = make_doc("a", [f"sentence {i}." for i in range(n_sent_a)])
    doc_b = make_doc("b", [f"sentence {i}." for i in range(n_sent_b)])
    assignment = {}
    for doc, count in ((doc_a, n_sent_a), (doc_b, n_sent_b)):
        for i in range(count):
            k = rng.randint(0, min(3, n_concepts))
            chosen = rng.sample(ids, k) if k else [dummy.id]
            assignment[(doc.id, i)] = frozenset(chosen)

    vectors = {c.id: random_vector(rng) for c in vertices}
    edges = {}
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if rng.random() < 0.7:
                edges[(u.id, v.id)] = round(rng.uniform(0.05, 1.0), 6)
    return ConceptGraph(
        "jcig", (doc_a, doc_b), vertices, assignment, vectors, edges
    )


@pytest.fixture
def rng():
    return random.Random(12345)
