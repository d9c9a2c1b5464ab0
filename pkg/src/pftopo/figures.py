"""Matplotlib renderings of families, partitions and law verdicts.

Figures are written straight to files (Agg backend); the CLI exposes them
behind --figure so reports can ship a picture next to the machine output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import SCALE
from .families import Family
from .relations import RhoPartition

_MU_COLOR = "#2a9d8f"
_RHO_COLOR = "#8d99ae"
_SIGMA_COLOR = "#e76f51"
_REFUSAL_COLOR = "#f4f1ea"


def save_family_figure(family: Family, path: str, partition: RhoPartition | None = None,
                       title: str | None = None) -> None:
    """One subplot per universe element; a stacked horizontal bar of
    mu/rho/sigma/refusal per member.  With a partition, members are grouped
    by class and annotated with their class index."""
    members = list(family.members)
    class_of: dict[str, int] = {}
    if partition is not None:
        for idx, cls in enumerate(partition.classes, start=1):
            for name in cls.members:
                class_of[name] = idx
        members.sort(key=lambda m: (class_of.get(m.name, 0), m.name))

    labels = list(family.universe.elements)
    n_rows = max(len(members), 1)
    fig, axes = plt.subplots(
        1, len(labels), figsize=(3.2 * len(labels) + 1.8, 0.42 * n_rows + 1.6),
        sharey=True, squeeze=False,
    )
    ys = range(len(members))
    names = [
        f"{m.name} [c{class_of[m.name]}]" if m.name in class_of else m.name
        for m in members
    ]
    xmax = 1.0
    for col, label in enumerate(labels):
        ax = axes[0][col]
        mu = [m.value.triple(label).mu.raw / SCALE for m in members]
        rho = [m.value.triple(label).rho.raw / SCALE for m in members]
        sigma = [m.value.triple(label).sigma.raw / SCALE for m in members]
        left = [0.0] * len(members)
        for series, color, tag in (
            (mu, _MU_COLOR, "mu"),
            (rho, _RHO_COLOR, "rho"),
            (sigma, _SIGMA_COLOR, "sigma"),
        ):
            ax.barh(ys, series, left=left, color=color, label=tag, height=0.7)
            left = [x + y for x, y in zip(left, series)]
        # out-of-contract rows can exceed 1; the refusal bar is never negative
        ax.barh(ys, [max(0.0, 1.0 - x) for x in left], left=left,
                color=_REFUSAL_COLOR, label="refusal", height=0.7,
                edgecolor="#cccccc", linewidth=0.4)
        xmax = max(xmax, max(left, default=1.0))
        ax.set_title(f"element {label}")
        ax.set_yticks(list(ys), names)
        ax.invert_yaxis()
    for col in range(len(labels)):
        axes[0][col].set_xlim(0, xmax)
    axes[0][-1].legend(loc="lower right", fontsize=8)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_laws_figure(verdicts, path: str, title: str | None = None) -> None:
    """One bar per law: green holds, red counterexample, grey vacuous."""
    ids = [v.law for v in verdicts]
    colors = []
    for v in verdicts:
        if v.vacuous:
            colors.append("#bbbbbb")
        elif v.holds:
            colors.append(_MU_COLOR)
        else:
            colors.append(_SIGMA_COLOR)
    fig, ax = plt.subplots(figsize=(8, 0.34 * len(ids) + 1.4))
    ax.barh(range(len(ids)), [1.0] * len(ids), color=colors, height=0.66)
    ax.set_yticks(range(len(ids)), ids)
    ax.invert_yaxis()
    ax.set_xticks([])
    for i, v in enumerate(verdicts):
        text = f"{v.outcome} ({v.instances} instances)"
        if v.vacuous:
            text += " [vacuous]"
        ax.text(0.01, i, text, va="center", fontsize=8)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
