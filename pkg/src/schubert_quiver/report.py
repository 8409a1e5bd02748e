"""Figures and delimited tables written next to CLI output."""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .quiver import Arrow, VertexLabel  # noqa: E402
from .verification import CheckResult  # noqa: E402

PASS_COLOUR = "#3b7d3b"
FAIL_COLOUR = "#b03030"


def write_verify_report(results: Sequence[CheckResult], directory: Path) -> tuple[Path, Path]:
    """``verify.csv`` with one row per criterion and ``verify.png`` charting runtimes against budgets."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    table = directory / "verify.csv"
    with table.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["criterion", "name", "passed", "cases", "seconds", "budget_seconds", "detail"])
        for res in results:
            writer.writerow([res.number, res.name, int(res.passed), res.cases, f"{res.seconds:.3f}", f"{res.budget:.0f}", res.detail])

    figure = directory / "verify.png"
    fig, ax = plt.subplots(figsize=(8, 0.45 * len(results) + 1.2))
    labels = [f"{res.number}" for res in results]
    positions = range(len(results))
    ax.barh(positions, [max(res.seconds, 1e-3) for res in results],
            color=[PASS_COLOUR if res.passed else FAIL_COLOUR for res in results])
    ax.scatter([res.budget for res in results], positions, marker="|", s=200, color="black", label="budget")
    ax.set_xscale("log")
    ax.set_yticks(list(positions), labels)
    ax.invert_yaxis()
    ax.set_xlabel("seconds (log scale)")
    ax.set_ylabel("criterion")
    ax.set_title(f"{sum(r.passed for r in results)}/{len(results)} criteria pass")
    ax.legend(loc="lower right", frameon=False)
    fig.tight_layout()
    fig.savefig(figure, dpi=120)
    plt.close(fig)
    return table, figure


def draw_quiver(vertices: Sequence[VertexLabel], arrows: Sequence[Arrow], path: Path, title: str = "") -> Path:
    """Vertices in rows by the size of their first partition; parallel arrows share one edge with a count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    levels: dict[int, list[VertexLabel]] = {}
    for v in vertices:
        levels.setdefault(v.first.size, []).append(v)
    where = {}
    for level, row in levels.items():
        for i, v in enumerate(row):
            where[v] = (i - (len(row) - 1) / 2, -level)
    widest = max((len(row) for row in levels.values()), default=1)
    fig, ax = plt.subplots(figsize=(max(4, 1.6 * widest), 1.4 * len(levels) + 1))
    multiplicity = Counter((a.source, a.target) for a in arrows)
    for (src, dst), count in multiplicity.items():
        ax.annotate("", xy=where[dst], xytext=where[src],
                    arrowprops=dict(arrowstyle="->", color="#555555", shrinkA=14, shrinkB=14))
        if count > 1:
            mx, my = (where[src][0] + where[dst][0]) / 2, (where[src][1] + where[dst][1]) / 2
            ax.text(mx, my, f"x{count}", fontsize=7, color="#555555")
    for v, (x, y) in where.items():
        ax.text(x, y, f"{v.first}\n{v.second}", ha="center", va="center", fontsize=8,
                bbox=dict(boxstyle="round", facecolor="white", edgecolor="#333333"))
    ax.set_xlim(-widest / 2 - 0.5, widest / 2 + 0.5)
    ax.set_ylim(-max(levels, default=0) - 0.7, 0.7)
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
