"""Graphviz DOT export with color-coded edges and class-fill overlays."""

from __future__ import annotations

from .coloring import Coloring, Partition
from .graph import Digraph

EDGE_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
    "#17becf",
)

FILL_PALETTE = (
    "#aec7e8",
    "#ffbb78",
    "#98df8a",
    "#ff9896",
    "#c5b0d5",
    "#c49c94",
    "#f7b6d2",
    "#dbdb8d",
)


def render_dot(
    graph: Digraph,
    coloring: Coloring | None = None,
    partition: Partition | None = None,
) -> str:
    """DOT text for the graph; edges are labeled with their color index and
    vertices of one merged class share a fill color."""
    lines = ["digraph roadcolor {", "  rankdir=LR;", "  node [shape=circle];"]
    fills: dict[int, str] = {}
    if partition is not None:
        shade = 0
        for cid, cls in enumerate(partition.classes):
            if len(cls) > 1:
                fills[cid] = FILL_PALETTE[shade % len(FILL_PALETTE)]
                shade += 1
    for v in range(graph.vertex_count):
        attrs = ""
        if partition is not None:
            cid = partition.class_of[v]
            if cid in fills:
                attrs = f' [style=filled, fillcolor="{fills[cid]}"]'
        lines.append(f"  {v}{attrs};")
    for v in range(graph.vertex_count):
        for slot, t in enumerate(graph.targets(v)):
            if coloring is not None:
                c = coloring.color_of[v][slot]
                pen = EDGE_PALETTE[c % len(EDGE_PALETTE)]
                lines.append(f'  {v} -> {t} [label="{c}", color="{pen}"];')
            else:
                lines.append(f"  {v} -> {t};")
    lines.append("}")
    return "\n".join(lines) + "\n"
