"""Report rendering: per-grade tables as TSV plus matplotlib figures.

Charts are written next to the delimited output so a batch run leaves a
self-contained directory: avoider counts against the factorial baseline,
and the coefficient profile of the last computed grade.
"""

from __future__ import annotations

from math import factorial
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .avoid import q_n
from .perm import Perm, format_pattern_set
from .qsym import NotInSpan, is_schur_nonnegative, to_schur

__all__ = ["build_rows", "write_report"]


def build_rows(patterns: Iterable[Perm], n_min: int, n_max: int) -> list[dict]:
    """One row per grade: count, symmetry, nonnegativity, expansion."""
    rows = []
    for n in range(n_min, n_max + 1):
        q = q_n(patterns, n)
        s = to_schur(q)
        if isinstance(s, NotInSpan):
            rows.append(
                {
                    "n": n,
                    "count": q.mass,
                    "symmetric": False,
                    "schur_nonnegative": "",
                    "expansion": str(q),
                    "schur": None,
                }
            )
        else:
            rows.append(
                {
                    "n": n,
                    "count": q.mass,
                    "symmetric": True,
                    "schur_nonnegative": is_schur_nonnegative(s),
                    "expansion": str(s),
                    "schur": s,
                }
            )
    return rows


def _write_tsv(rows: list[dict], path: Path) -> None:
    header = ["n", "count", "symmetric", "schur_nonnegative", "expansion"]
    lines = ["\t".join(header)]
    for row in rows:
        lines.append(
            "\t".join(str(row[h]) for h in header)
        )
    path.write_text("\n".join(lines) + "\n")


def _counts_figure(rows: list[dict], path: Path, title: str) -> None:
    ns = [row["n"] for row in rows]
    counts = [row["count"] for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, [max(c, 1) for c in counts], "o-", label="avoiders")
    ax.semilogy(ns, [factorial(n) for n in ns], "--", color="gray", label="n!")
    ax.set_xlabel("n")
    ax.set_ylabel("count (log scale)")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _coefficients_figure(rows: list[dict], path: Path, title: str) -> None:
    last_sym = next((row for row in reversed(rows) if row["schur"] is not None), None)
    fig, ax = plt.subplots(figsize=(7, 4))
    if last_sym is None:
        ax.text(0.5, 0.5, "no symmetric grade in range", ha="center", va="center")
        ax.set_axis_off()
    else:
        s = last_sym["schur"]
        items = sorted(s.coeffs.items(), key=lambda kv: kv[0], reverse=True)
        labels = ["+".join(str(a) for a in lam) for lam, _ in items]
        values = [c for _, c in items]
        colors = ["tab:blue" if c >= 0 else "tab:red" for c in values]
        ax.bar(range(len(values)), values, color=colors)
        ax.set_xticks(range(len(values)))
        ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
        ax.axhline(0, color="black", linewidth=0.8)
        ax.set_ylabel("Schur coefficient")
        ax.set_title(f"{title} (n = {last_sym['n']})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(
    patterns: Iterable[Perm], n_min: int, n_max: int, out_dir: str | Path
) -> list[Path]:
    """Write report.tsv, counts.png and coefficients.png; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = build_rows(patterns, n_min, n_max)
    label = format_pattern_set(patterns) or "(no patterns)"
    paths = [out / "report.tsv", out / "counts.png", out / "coefficients.png"]
    _write_tsv(rows, paths[0])
    _counts_figure(rows, paths[1], f"avoiders of {label}")
    _coefficients_figure(rows, paths[2], f"expansion for {label}")
    return paths
