"""Batch report: delimited count data plus rendered figures.

Writes per-base and total avoider counts as CSV and a couple of PNG
charts next to them.  matplotlib is imported lazily so the rest of the
CLI never pays for it.
"""
from __future__ import annotations

from pathlib import Path
from typing import Mapping

from .core import CHAINS, permutational
from .enumeration import count_table

__all__ = ["DEFAULT_PATTERN_SETS", "write_report"]


def DEFAULT_PATTERN_SETS() -> dict[str, object]:
    sets: dict[str, object] = {
        name: permutational(name) for name in ("132", "213", "123", "321", "231", "312")
    }
    sets["Cfam"] = CHAINS
    return sets


def write_report(
    max_size: int,
    out_dir: str | Path,
    pattern_sets: Mapping[str, object] | None = None,
) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    sets = dict(pattern_sets) if pattern_sets else DEFAULT_PATTERN_SETS()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    tables = {m: count_table(m, sets) for m in range(1, max_size + 1)}
    labels = list(sets)

    counts_csv = out / "counts.csv"
    lines = ["m,w,pattern_set,count"]
    for m in range(1, max_size + 1):
        lines.extend(f"{m},{w},{lab},{c}" for w, lab, c in tables[m].entries)
    counts_csv.write_text("\n".join(lines) + "\n")

    totals_csv = out / "totals.csv"
    lines = ["m,pattern_set,count"]
    for m in range(1, max_size + 1):
        lines.extend(f"{m},{lab},{tables[m].marginal(lab)}" for lab in labels)
    totals_csv.write_text("\n".join(lines) + "\n")

    growth_png = out / "counts_growth.png"
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ms = list(range(1, max_size + 1))
    for lab in labels:
        ax.plot(ms, [tables[m].marginal(lab) for m in ms], marker="o", label=lab)
    ax.set_xlabel("matching size m")
    ax.set_ylabel("avoiders")
    if max_size >= 4:
        ax.set_yscale("log")
    ax.set_title("Pattern-avoiding matchings by size")
    ax.set_xticks(ms)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(growth_png, dpi=150)
    plt.close(fig)

    profile_png = out / "base_profile.png"
    m0 = min(max_size, 4)
    table = tables[m0]
    words = sorted({w for w, _, _ in table.entries})
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for lab in labels:
        per = table.per_base(lab)
        ax.plot(range(len(words)), [per[w] for w in words], marker=".", label=lab)
    ax.set_xticks(range(len(words)))
    ax.set_xticklabels(words, rotation=90, fontsize=7)
    ax.set_xlabel("base word (lexicographic)")
    ax.set_ylabel("avoiders")
    ax.set_title(f"Avoiders per base word, m={m0}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(profile_png, dpi=150)
    plt.close(fig)

    return [counts_csv, totals_csv, growth_png, profile_png]
