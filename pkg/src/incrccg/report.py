"""Figures written next to the record output of ``check`` and ``parse``."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _family(strategy_name: str) -> str:
    return "random" if strategy_name.startswith("random") else strategy_name


def plot_rewrite_steps(samples, path) -> Path:
    """Steps to normal form against internal-node count, with both bounds drawn."""
    groups = defaultdict(list)
    for n, name, steps in samples:
        groups[_family(name)].append((n, steps))
    fig, ax = plt.subplots(figsize=(6, 4))
    markers = {"root-first": "o", "leftmost-innermost": "s", "random": "."}
    for family, pts in sorted(groups.items()):
        worst = defaultdict(int)
        for n, steps in pts:
            worst[n] = max(worst[n], steps)
        xs = sorted(worst)
        ax.plot(xs, [worst[x] for x in xs], marker=markers.get(family, "x"),
                linestyle="-", label=f"{family} (max)")
    top = max((n for n, _, _ in samples), default=1)
    xs = list(range(0, top + 1))
    ax.plot(xs, [n * (n - 1) / 2 for n in xs], "k--", label="n(n-1)/2")
    ax.plot(xs, xs, "k:", label="n")
    ax.set_xlabel("internal nodes n")
    ax.set_ylabel("contraction steps")
    ax.set_title("Steps to right-branching normal form")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_analysis_counts(series: dict, words, path) -> Path:
    """Number of parallel analyses after each word, one line per policy."""
    fig, ax = plt.subplots(figsize=(max(5, 0.7 * len(words) + 2), 4))
    xs = list(range(len(words)))
    for label, counts in series.items():
        ax.plot(xs[:len(counts)], counts, marker="o", label=label)
    ax.set_xticks(xs)
    ax.set_xticklabels(words, rotation=30, ha="right")
    ax.set_ylabel("analyses")
    ax.set_yscale("log")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_suite_times(results, path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 3))
    names = [r.name for r in results]
    colors = ["tab:green" if r.passed else "tab:red" for r in results]
    ax.barh(names, [r.elapsed for r in results], color=colors)
    ax.set_xlabel("seconds")
    ax.invert_yaxis()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_check_figures(results, outdir) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [plot_suite_times(results, outdir / "suite_times.png")]
    for r in results:
        if "samples" in r.data:
            paths.append(plot_rewrite_steps(r.data["samples"], outdir / "rewrite_steps.png"))
    return paths
