"""Matplotlib rendering of (colored) graphs to image files.

A companion to the DOT export for quick visual inspection without a
Graphviz install: vertices on a circle, edges as arced arrows tinted by
color index, merged classes sharing a node fill.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, FancyArrowPatch

from .coloring import Coloring, Partition
from .dot import EDGE_PALETTE, FILL_PALETTE
from .graph import Digraph


def _layout(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i in range(n)
    ]


def draw_graph(
    graph: Digraph,
    coloring: Coloring | None = None,
    partition: Partition | None = None,
    ax=None,
):
    """Draw onto ``ax`` (a fresh figure's axes when omitted); returns the axes."""
    if ax is None:
        _, ax = plt.subplots(figsize=(6, 6))
    n = graph.vertex_count
    pos = _layout(n)
    node_r = 0.08 if n <= 12 else 0.05

    fills: dict[int, str] = {}
    if partition is not None:
        shade = 0
        for cid, cls in enumerate(partition.classes):
            if len(cls) > 1:
                fills[cid] = FILL_PALETTE[shade % len(FILL_PALETTE)]
                shade += 1

    seen_arcs: dict[tuple[int, int], int] = {}
    for v in range(n):
        for slot, t in enumerate(graph.targets(v)):
            tint = "#555555"
            if coloring is not None:
                tint = EDGE_PALETTE[coloring.color_of[v][slot] % len(EDGE_PALETTE)]
            if v == t:
                # Self-loop: a small circle tangent to the node, pointing outward.
                ox, oy = pos[v]
                norm = math.hypot(ox, oy) or 1.0
                cx, cy = ox + 1.6 * node_r * ox / norm, oy + 1.6 * node_r * oy / norm
                if (ox, oy) == (0.0, 0.0):
                    cx, cy = 1.6 * node_r, 0.0
                ax.add_patch(
                    Circle((cx, cy), node_r, fill=False, edgecolor=tint, lw=1.4)
                )
                continue
            dup = seen_arcs.get((v, t), 0)
            seen_arcs[(v, t)] = dup + 1
            rad = 0.12 + 0.18 * dup
            arrow = FancyArrowPatch(
                pos[v],
                pos[t],
                connectionstyle=f"arc3,rad={rad}",
                arrowstyle="-|>",
                mutation_scale=12,
                color=tint,
                lw=1.4,
                shrinkA=14,
                shrinkB=14,
            )
            ax.add_patch(arrow)

    for v in range(n):
        face = "white"
        if partition is not None and partition.class_of[v] in fills:
            face = fills[partition.class_of[v]]
        ax.add_patch(
            Circle(pos[v], node_r, facecolor=face, edgecolor="black", zorder=3)
        )
        ax.text(*pos[v], str(v), ha="center", va="center", zorder=4, fontsize=9)

    ax.set_xlim(-1.4, 1.4)
    ax.set_ylim(-1.4, 1.4)
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def save_figure(
    path: str,
    graph: Digraph,
    coloring: Coloring | None = None,
    partition: Partition | None = None,
) -> None:
    ax = draw_graph(graph, coloring, partition)
    fig = ax.figure
    # SVG output embeds a timestamp unless the Date field is suppressed.
    metadata = {"Date": None} if path.endswith(".svg") else None
    fig.savefig(path, dpi=150, bbox_inches="tight", metadata=metadata)
    plt.close(fig)
