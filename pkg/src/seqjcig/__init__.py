"""Sparse directed joint concept interaction graphs for procedural documents."""

from .config import PipelineParams
from .corpus import Document, DocumentPair, Sentence, generate_pairs, load_corpus
from .cig import ConceptGraph, build_cig, build_jcig
from .seqdir import SeqGraph, build_seq_jcig

__all__ = [
    "PipelineParams",
    "Document",
    "DocumentPair",
    "Sentence",
    "generate_pairs",
    "load_corpus",
    "ConceptGraph",
    "build_cig",
    "build_jcig",
    "SeqGraph",
    "build_seq_jcig",
]

__version__ = "0.1.0"
