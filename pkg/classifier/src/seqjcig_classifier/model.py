"""Siamese encoder, match vectors, GCN, and the pair classifier."""
from __future__ import annotations

import numpy as np
import torch
from torch import nn

from .embeddings import EmbeddingTable
from .graphs import GraphInstance


class SiameseEncoder(nn.Module):
    """Shared-weight recurrent context encoder.

    A single-layer bidirectional GRU over a word-vector sequence; the final
    hidden states of both directions are concatenated, so the output
    dimension equals the (even) input embedding dimension.
    """

    def __init__(self, dim: int):
        super().__init__()
        if dim % 2:
            raise ValueError("embedding dimension must be even")
        self.dim = dim
        self.gru = nn.GRU(dim, dim // 2, batch_first=True, bidirectional=True)

    def forward(self, sequences: list[torch.Tensor]) -> torch.Tensor:
        """Encode a list of (len_i × dim) sequences into an (n × dim) matrix."""
        lengths = torch.tensor([len(s) for s in sequences])
        padded = nn.utils.rnn.pad_sequence(sequences, batch_first=True)
        packed = nn.utils.rnn.pack_padded_sequence(
            padded, lengths, batch_first=True, enforce_sorted=False
        )
        _, h_n = self.gru(packed)  # (2, n, dim/2)
        return torch.cat([h_n[0], h_n[1]], dim=-1)


def match_vectors(c_a: torch.Tensor, c_b: torch.Tensor) -> torch.Tensor:
    """m_AB(v) = concat(|c_A − c_B|, c_A ∘ c_B), per vertex (n × 2d)."""
    return torch.cat([(c_a - c_b).abs(), c_a * c_b], dim=-1)


class GCN(nn.Module):
    """Stacked graph convolutions over a directed adjacency with mean readout.

    Each layer computes tanh(D_in⁻¹ (A + I) H W + b), where A[i, j] = 1 for
    an edge j→i (bidirectional edges contribute both directions) and the
    added self-loops keep D_in nonsingular.
    """

    def __init__(self, in_dim: int, hidden: int, layers: int):
        super().__init__()
        dims = [in_dim] + [hidden] * layers
        self.layers = nn.ModuleList(
            nn.Linear(dims[i], dims[i + 1]) for i in range(layers)
        )

    def forward(self, adjacency: torch.Tensor, features: torch.Tensor) -> torch.Tensor:
        if adjacency.shape[0] == 0:
            raise ValueError("cannot run the GCN on an empty graph")
        a_hat = adjacency + torch.eye(
            adjacency.shape[0], dtype=adjacency.dtype, device=adjacency.device
        )
        norm = a_hat / a_hat.sum(dim=1, keepdim=True)
        h = features
        for layer in self.layers:
            h = torch.tanh(layer(norm @ h))
        return h.mean(dim=0)


class PairClassifier(nn.Module):
    """End-to-end model: Siamese encoder → match vectors → GCN → MLP logit."""

    def __init__(
        self,
        embedding_dim: int,
        gcn_hidden: int = 128,
        gcn_layers: int = 3,
        mlp_hidden: int = 64,
    ):
        super().__init__()
        self.encoder = SiameseEncoder(embedding_dim)
        self.gcn = GCN(2 * embedding_dim, gcn_hidden, gcn_layers)
        self.mlp = nn.Sequential(
            nn.Linear(gcn_hidden, mlp_hidden),
            nn.Tanh(),
            nn.Linear(mlp_hidden, 1),
        )

    def forward(
        self,
        seqs_a: list[torch.Tensor],
        seqs_b: list[torch.Tensor],
        adjacency: torch.Tensor,
    ) -> torch.Tensor:
        c_a = self.encoder(seqs_a)
        c_b = self.encoder(seqs_b)
        graph_vec = self.gcn(adjacency, match_vectors(c_a, c_b))
        return self.mlp(graph_vec).squeeze(-1)


def embed_instance(
    instance: GraphInstance, table: EmbeddingTable, dtype=torch.float32
) -> tuple[list[torch.Tensor], list[torch.Tensor], torch.Tensor]:
    """Turn a GraphInstance into model inputs.

    Vertices without sentences from one document are represented by a
    single-step sequence holding the corpus-average vector.
    """

    def side(token_lists):
        return [
            torch.as_tensor(np.asarray(table.encode(toks)), dtype=dtype)
            for toks in token_lists
        ]

    adjacency = torch.as_tensor(instance.adjacency, dtype=dtype)
    return side(instance.tokens_a), side(instance.tokens_b), adjacency
