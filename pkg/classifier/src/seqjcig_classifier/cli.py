"""Command-line entry point: train on a graph directory, emit metrics JSON."""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .config import TrainConfig
from .train import train_and_eval


@click.group()
def main():
    """Document-pair similarity classifier over SeqGraph JSON files."""


@main.command()
@click.argument("pairs", type=click.Path(exists=True, dir_okay=False))
@click.argument("graph_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--variant", default="c_hp", show_default=True)
@click.option("--embedding-dim", type=click.Choice(["100", "200"]), default="100")
@click.option("--learning-rate", type=float, default=0.0005, show_default=True)
@click.option("--epochs", type=int, default=50, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write metrics JSON here (default: stdout).")
def train(pairs, graph_dir, variant, embedding_dim, learning_rate, epochs, seed, out):
    """Train and evaluate; print or write metrics JSON."""
    config = TrainConfig(
        embedding_dim=int(embedding_dim),
        learning_rate=learning_rate,
        epochs=epochs,
        seed=seed,
    )
    try:
        metrics = train_and_eval(pairs, graph_dir, variant, config)
    except (FileNotFoundError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    text = json.dumps(metrics, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


if __name__ == "__main__":
    main()
