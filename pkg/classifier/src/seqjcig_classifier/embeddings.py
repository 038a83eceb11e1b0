"""Skip-gram word embeddings with negative sampling."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import torch


@dataclass
class EmbeddingTable:
    """Word-vector lookup with a corpus-average fallback.

    ``vectors`` has one row per vocabulary entry; ``average`` is the column
    mean of the table and is substituted for out-of-vocabulary tokens.
    """

    vocab: dict[str, int]
    vectors: np.ndarray
    average: np.ndarray

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def lookup(self, token: str) -> np.ndarray:
        idx = self.vocab.get(token)
        if idx is None:
            return self.average
        return self.vectors[idx]

    def encode(self, tokens: list[str]) -> np.ndarray:
        """Stack vectors for a token sequence (shape: len × dim)."""
        if not tokens:
            return self.average[None, :].copy()
        return np.stack([self.lookup(t) for t in tokens])


def _skipgram_pairs(sentences, vocab, window, rng):
    centers, contexts = [], []
    for sent in sentences:
        ids = [vocab[t] for t in sent if t in vocab]
        for i, c in enumerate(ids):
            lo = max(0, i - window)
            hi = min(len(ids), i + window + 1)
            for j in range(lo, hi):
                if j != i:
                    centers.append(c)
                    contexts.append(ids[j])
    order = rng.permutation(len(centers))
    return np.asarray(centers)[order], np.asarray(contexts)[order]


def train_embeddings(
    sentences: list[list[str]],
    dim: int = 100,
    *,
    window: int = 3,
    negatives: int = 5,
    epochs: int = 5,
    lr: float = 0.01,
    seed: int = 0,
    batch_size: int = 1024,
) -> EmbeddingTable:
    """Train skip-gram embeddings with negative sampling on tokenized sentences.

    Raises ``ValueError`` on an empty corpus (no tokens at all).
    """
    tokens = [t for sent in sentences for t in sent]
    if not tokens:
        raise ValueError("cannot train embeddings on an empty corpus")
    vocab = {t: i for i, t in enumerate(sorted(set(tokens)))}
    n_vocab = len(vocab)

    rng = np.random.default_rng(seed)
    gen = torch.Generator().manual_seed(seed)
    emb_in = torch.empty(n_vocab, dim, dtype=torch.float32)
    emb_out = torch.zeros(n_vocab, dim, dtype=torch.float32)
    torch.nn.init.uniform_(emb_in, -0.5 / dim, 0.5 / dim, generator=gen)
    emb_in.requires_grad_(True)
    emb_out.requires_grad_(True)

    # unigram^0.75 negative-sampling distribution
    counts = np.zeros(n_vocab)
    for t in tokens:
        counts[vocab[t]] += 1
    neg_probs = counts**0.75
    neg_probs /= neg_probs.sum()

    opt = torch.optim.Adam([emb_in, emb_out], lr=lr)
    centers, contexts = _skipgram_pairs(sentences, vocab, window, rng)
    for _ in range(epochs):
        for start in range(0, len(centers), batch_size):
            c = torch.from_numpy(centers[start : start + batch_size])
            ctx = torch.from_numpy(contexts[start : start + batch_size])
            neg = torch.from_numpy(
                rng.choice(n_vocab, size=(len(c), negatives), p=neg_probs)
            )
            v_c = emb_in[c]
            pos_score = (v_c * emb_out[ctx]).sum(-1)
            neg_score = torch.einsum("bd,bkd->bk", v_c, emb_out[neg])
            loss = (
                torch.nn.functional.softplus(-pos_score).mean()
                + torch.nn.functional.softplus(neg_score).mean()
            )
            opt.zero_grad()
            loss.backward()
            opt.step()

    table = emb_in.detach().numpy().astype(np.float64)
    return EmbeddingTable(vocab=vocab, vectors=table, average=table.mean(axis=0))
