"""End-to-end training and evaluation over SeqGraph files."""
from __future__ import annotations

import random
from pathlib import Path

import torch

from .config import TrainConfig
from .embeddings import train_embeddings
from .graphs import GraphInstance, graph_path, load_graph, load_pairs
from .model import PairClassifier, embed_instance


def binary_metrics(labels: list[int], predictions: list[int]) -> dict[str, float]:
    """Accuracy and F1 for the positive class (0.0 F1 when degenerate)."""
    correct = sum(1 for y, p in zip(labels, predictions) if y == p)
    tp = sum(1 for y, p in zip(labels, predictions) if y == 1 and p == 1)
    fp = sum(1 for y, p in zip(labels, predictions) if y == 0 and p == 1)
    fn = sum(1 for y, p in zip(labels, predictions) if y == 1 and p == 0)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return {"accuracy": correct / len(labels) if labels else 0.0, "f1": f1}


def split_dataset(items: list, split: tuple[float, float, float], seed: int):
    """Seeded shuffle, then contiguous train/validation/test slices."""
    order = list(items)
    random.Random(seed).shuffle(order)
    n = len(order)
    n_train = round(split[0] * n)
    n_val = round(split[1] * n)
    return order[:n_train], order[n_train : n_train + n_val], order[n_train + n_val :]


def load_dataset(
    pairs_path: str | Path, graph_dir: str | Path, variant: str
) -> list[tuple[GraphInstance, int]]:
    dataset = []
    for a, b, label in load_pairs(pairs_path):
        path = graph_path(graph_dir, a, b, variant)
        if not path.exists():
            raise FileNotFoundError(f"missing graph file for pair ({a}, {b}): {path}")
        dataset.append((load_graph(path), label))
    return dataset


def _evaluate(model, batches) -> dict[str, float]:
    model.eval()
    labels, preds, losses = [], [], []
    loss_fn = torch.nn.BCEWithLogitsLoss(reduction="sum")
    with torch.no_grad():
        for (seqs_a, seqs_b, adj), label in batches:
            logit = model(seqs_a, seqs_b, adj)
            preds.append(int(logit.item() > 0))
            labels.append(label)
            losses.append(loss_fn(logit, torch.tensor(float(label))).item())
    metrics = binary_metrics(labels, preds)
    metrics["loss"] = sum(losses) / len(losses) if losses else 0.0
    return metrics


def train_and_eval(
    pairs_path: str | Path,
    graph_dir: str | Path,
    variant: str,
    config: TrainConfig = TrainConfig(),
    batch_size: int = 8,
) -> dict:
    """Train the pair classifier and report test metrics.

    Returns ``{"accuracy", "f1", "variant", "config"}``.  Raises
    ``FileNotFoundError`` naming the pair when a graph file is missing.
    """
    dataset = load_dataset(pairs_path, graph_dir, variant)
    if not dataset:
        raise ValueError("empty pair list")

    sentences = [s for inst, _ in dataset for s in inst.sentence_tokens]
    table = train_embeddings(
        sentences,
        config.embedding_dim,
        window=config.embedding_window,
        negatives=config.embedding_negatives,
        epochs=config.embedding_epochs,
        seed=config.seed,
    )

    torch.manual_seed(config.seed)
    model = PairClassifier(
        config.embedding_dim,
        gcn_hidden=config.gcn_hidden,
        gcn_layers=config.gcn_layers,
        mlp_hidden=config.mlp_hidden,
    )
    encoded = [(embed_instance(inst, table), label) for inst, label in dataset]
    train_set, val_set, test_set = split_dataset(encoded, config.split, config.seed)

    opt = torch.optim.Adam(model.parameters(), lr=config.learning_rate)
    loss_fn = torch.nn.BCEWithLogitsLoss()
    shuffler = random.Random(config.seed + 1)
    # improvement = higher validation F1, or equal F1 at lower validation
    # loss; loss progress alone resets patience so training is not cut off
    # while the decision boundary is still forming
    best_score, best_state, stale = (-1.0, float("-inf")), None, 0
    for _ in range(config.epochs):
        model.train()
        shuffler.shuffle(train_set)
        for start in range(0, len(train_set), batch_size):
            batch = train_set[start : start + batch_size]
            logits = torch.stack(
                [model(seqs_a, seqs_b, adj) for (seqs_a, seqs_b, adj), _ in batch]
            )
            targets = torch.tensor([float(label) for _, label in batch])
            opt.zero_grad()
            loss_fn(logits, targets).backward()
            opt.step()
        if not val_set:
            continue
        val = _evaluate(model, val_set)
        score = (val["f1"], -val["loss"])
        if score > best_score:
            stale = 0
            if val["f1"] > best_score[0]:
                best_state = {k: v.clone() for k, v in model.state_dict().items()}
            best_score = score
        else:
            stale += 1
            if stale >= config.early_stopping_patience:
                break
    if best_state is not None:
        model.load_state_dict(best_state)

    metrics = _evaluate(model, test_set)
    return {
        "accuracy": metrics["accuracy"],
        "f1": metrics["f1"],
        "variant": variant,
        "config": config.to_dict(),
    }
