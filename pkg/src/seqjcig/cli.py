"""Command-line interface: keywords, pairs, build, stats.

Exit codes: 0 success, 1 I/O or runtime failure, 2 validation failure.
"""
from __future__ import annotations

import functools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from . import corpus as corpus_mod
from .config import VARIANTS, PipelineParams
from .errors import ValidationError
from .keywords import extract_keywords
from .report import aggregate, format_table, write_report
from .seqdir import build_seq_jcig
from .serialize import dumps, load_graph_record, seq_graph_to_dict


def _load_params(config_path, **overrides) -> PipelineParams:
    params = (
        PipelineParams.from_file(config_path) if config_path else PipelineParams()
    )
    return params.replace(**{k: v for k, v in overrides.items() if v is not None})


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group()
@click.version_option()
def main():
    """Build sparse directed concept interaction graphs from document pairs."""


@main.command()
@click.argument("corpus_path", type=click.Path(exists=True))
@click.option("--config", "config_path", type=click.Path(exists=True))
@click.option("--out", "out_path", type=click.Path(), required=True)
@_handle_errors
def keywords(corpus_path, config_path, out_path):
    """Extract per-document keywords to a JSON file."""
    params = _load_params(config_path)
    docs = corpus_mod.load_corpus(corpus_path)
    if not docs:
        raise ValidationError("empty corpus")
    result = {
        doc.id: [[kw, round(score, 10)] for kw, score in extract_keywords(
            doc,
            top_k=params.top_k,
            window=params.window,
            damping=params.damping,
            tol=params.pagerank_tol,
            max_iter=params.max_iter,
        ).entries]
        for doc in docs
    }
    Path(out_path).write_text(
        json.dumps(result, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )


@main.command()
@click.argument("corpus_path", type=click.Path(exists=True))
@click.option("--config", "config_path", type=click.Path(exists=True))
@click.option("--seed", type=int, default=None)
@click.option("--out", "out_path", type=click.Path(), required=True)
@_handle_errors
def pairs(corpus_path, config_path, seed, out_path):
    """Generate labeled document pairs (subject + shared-tag rule)."""
    params = _load_params(config_path, seed=seed)
    docs = corpus_mod.load_corpus(corpus_path)
    pair_list = corpus_mod.generate_pairs(docs, params.negative_ratio, params.seed)
    corpus_mod.save_pairs(pair_list, out_path)


def _build_one(docs_by_id, params, variant, out_dir, pair):
    sg = build_seq_jcig(
        docs_by_id[pair.doc_a_id], docs_by_id[pair.doc_b_id], variant, params
    )
    name = f"{pair.doc_a_id}__{pair.doc_b_id}.{variant}.json"
    text = dumps(seq_graph_to_dict(sg, params.replace(variant=variant)))
    tmp = Path(out_dir) / (name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(Path(out_dir) / name)
    return name


@main.command()
@click.argument("corpus_path", type=click.Path(exists=True))
@click.argument("pairs_path", type=click.Path(exists=True))
@click.option("--config", "config_path", type=click.Path(exists=True))
@click.option("--variant", type=click.Choice(VARIANTS), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--jobs", type=int, default=1)
@click.option("--out", "out_dir", type=click.Path(), required=True)
@_handle_errors
def build(corpus_path, pairs_path, config_path, variant, seed, jobs, out_dir):
    """Build one SeqGraph JSON per document pair."""
    params = _load_params(config_path, variant=variant, seed=seed)
    variant = params.variant
    docs_by_id = {doc.id: doc for doc in corpus_mod.load_corpus(corpus_path)}
    pair_list = corpus_mod.load_pairs(pairs_path)
    for pair in pair_list:
        for doc_id in (pair.doc_a_id, pair.doc_b_id):
            if doc_id not in docs_by_id:
                raise ValidationError(
                    f"pair ({pair.doc_a_id}, {pair.doc_b_id}) references "
                    f"unknown document {doc_id!r}"
                )
    Path(out_dir).mkdir(parents=True, exist_ok=True)
    worker = functools.partial(_build_one, docs_by_id, params, variant, out_dir)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            names = list(pool.map(worker, pair_list))
    else:
        names = [worker(pair) for pair in pair_list]
    click.echo(f"wrote {len(names)} graphs to {out_dir}")


@main.command()
@click.argument("graph_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--out", "out_path", type=click.Path(), default=None)
@click.option("--report", "report_dir", type=click.Path(), default=None)
@_handle_errors
def stats(graph_dir, out_path, report_dir):
    """Aggregate per-variant statistics over a directory of SeqGraph JSONs."""
    paths = sorted(Path(graph_dir).glob("*.json"))
    if not paths:
        raise ValidationError(f"no graph files in {graph_dir}")
    records = []
    for path in paths:
        try:
            records.append((path.name, load_graph_record(path)))
        except (ValidationError, json.JSONDecodeError) as exc:
            click.echo(f"error: malformed graph file {path.name}: {exc}", err=True)
            sys.exit(1)
    try:
        summary = aggregate(records)
    except ValidationError as exc:
        # sparsity-bound violations are hard errors, not validation issues
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(format_table(summary))
    if out_path:
        Path(out_path).write_text(
            json.dumps(summary, indent=1, sort_keys=True) + "\n", encoding="utf-8"
        )
    if report_dir:
        for written in write_report(records, summary, report_dir):
            click.echo(f"report: {written}")


if __name__ == "__main__":
    main()
