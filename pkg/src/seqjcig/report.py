"""Aggregate statistics over graph directories, with CSV and figure output."""
from __future__ import annotations

import csv
from pathlib import Path
from typing import Any

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .errors import ValidationError

STAT_FIELDS = (
    "vertex_count",
    "edge_count",
    "dummy_sentence_fraction",
    "bidirectional_edge_count",
    "completion_edge_count",
    "sparsity_ratio",
)


def check_sparsity(record: dict[str, Any], name: str) -> None:
    """HP graphs must honor the path bound of at most n-1 edges."""
    stats = record["stats"]
    if record["variant"] in ("c_hp",) and stats["edge_count"] > max(
        stats["vertex_count"] - 1, 0
    ):
        raise ValidationError(
            f"{name}: c_hp graph violates the edge bound "
            f"({stats['edge_count']} edges for {stats['vertex_count']} vertices)"
        )


def aggregate(records: list[tuple[str, dict[str, Any]]]) -> dict[str, Any]:
    """Per-variant means of the per-graph statistics."""
    if not records:
        raise ValidationError("no graph files to aggregate")
    by_variant: dict[str, list[dict[str, Any]]] = {}
    for name, record in records:
        check_sparsity(record, name)
        by_variant.setdefault(record["variant"], []).append(record["stats"])
    summary = {}
    for variant, stats in sorted(by_variant.items()):
        summary[variant] = {
            "graph_count": len(stats),
            **{
                f"mean_{f}": round(sum(s[f] for s in stats) / len(stats), 6)
                for f in STAT_FIELDS
            },
        }
    return summary


def format_table(summary: dict[str, Any]) -> str:
    cols = ["variant", "graphs", "vertices", "edges", "bidir", "sparsity"]
    rows = [
        [
            variant,
            str(agg["graph_count"]),
            f"{agg['mean_vertex_count']:.1f}",
            f"{agg['mean_edge_count']:.1f}",
            f"{agg['mean_bidirectional_edge_count']:.1f}",
            f"{agg['mean_sparsity_ratio']:.3f}",
        ]
        for variant, agg in summary.items()
    ]
    widths = [max(len(r[i]) for r in [cols] + rows) for i in range(len(cols))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in [cols] + rows]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)


def write_report(
    records: list[tuple[str, dict[str, Any]]],
    summary: dict[str, Any],
    out_dir: str | Path,
) -> list[Path]:
    """Write stats.csv plus sparsity and edge-count figures into out_dir."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out_dir / "stats.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["graph", "variant", *STAT_FIELDS])
        for name, record in records:
            writer.writerow(
                [name, record["variant"]]
                + [record["stats"][f] for f in STAT_FIELDS]
            )
    written.append(csv_path)

    variants = sorted({r["variant"] for _, r in records})
    fig, ax = plt.subplots(figsize=(6, 4))
    for variant in variants:
        ratios = [
            r["stats"]["sparsity_ratio"] for _, r in records if r["variant"] == variant
        ]
        ax.hist(ratios, bins=20, range=(0, 1), alpha=0.6, label=variant)
    ax.set_xlabel("sparsity ratio (edges / max pairs)")
    ax.set_ylabel("graphs")
    ax.legend()
    fig.tight_layout()
    sparsity_path = out_dir / "sparsity.png"
    fig.savefig(sparsity_path, dpi=120)
    plt.close(fig)
    written.append(sparsity_path)

    fig, ax = plt.subplots(figsize=(6, 4))
    for variant in variants:
        pts = [
            (r["stats"]["vertex_count"], r["stats"]["edge_count"])
            for _, r in records
            if r["variant"] == variant
        ]
        ax.scatter(*zip(*pts), s=14, alpha=0.7, label=variant)
    ns = sorted({r["stats"]["vertex_count"] for _, r in records})
    ax.plot(ns, [n - 1 for n in ns], "k--", linewidth=1, label="n-1 bound")
    ax.set_xlabel("vertices")
    ax.set_ylabel("edges")
    ax.legend()
    fig.tight_layout()
    edges_path = out_dir / "edges_vs_vertices.png"
    fig.savefig(edges_path, dpi=120)
    plt.close(fig)
    written.append(edges_path)
    return written
