"""Text formats for graphs and colorings.

Graph format: first meaningful line is ``n d_max``; then one line per vertex
``deg t_1 ... t_deg`` with 0-based targets in slot order.  Lines starting
with ``#`` are ignored, parsing is whitespace-tolerant, and emitting always
produces the canonical single-space form.

Coloring format: one line per vertex holding ``outdeg(v)`` color indices in
slot order (an empty line for an isolated vertex).
"""

from __future__ import annotations

from .coloring import Coloring
from .errors import ParseError
from .graph import Digraph


def _int_tokens(tokens: list[str], line_no: int) -> list[int]:
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", line_no) from None
    return values


def parse_graph(text: str) -> Digraph:
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header line 'n d_max'", 1)
    header_no, header = lines[0]
    head = _int_tokens(header.split(), header_no)
    if len(head) != 2:
        raise ParseError("header must be exactly 'n d_max'", header_no)
    n, _d_max = head
    if n < 0:
        raise ParseError("vertex count must be nonnegative", header_no)
    if len(lines) - 1 < n:
        raise ParseError(f"expected {n} vertex lines, found {len(lines) - 1}", header_no)
    if len(lines) - 1 > n:
        extra_no, _ = lines[n + 1]
        raise ParseError("unexpected extra line after last vertex", extra_no)

    rows: list[tuple[int, ...]] = []
    for v in range(n):
        line_no, line = lines[v + 1]
        values = _int_tokens(line.split(), line_no)
        deg, targets = values[0], values[1:]
        if deg < 0:
            raise ParseError("outdegree must be nonnegative", line_no)
        if len(targets) != deg:
            raise ParseError(
                f"vertex {v}: declared outdegree {deg} but {len(targets)} targets",
                line_no,
            )
        rows.append(tuple(targets))
    return Digraph(tuple(rows))


def emit_graph(graph: Digraph) -> str:
    d_max = max(
        (graph.outdegree(v) for v in range(graph.vertex_count)), default=0
    )
    out = [f"{graph.vertex_count} {d_max}"]
    for v in range(graph.vertex_count):
        row = graph.targets(v)
        out.append(" ".join([str(len(row)), *map(str, row)]))
    return "\n".join(out) + "\n"


def parse_coloring(text: str, graph: Digraph) -> Coloring:
    # Blank lines are significant here: they carry zero-outdegree vertices.
    lines = [
        (no, line)
        for no, line in enumerate(text.splitlines(), start=1)
        if not line.lstrip().startswith("#")
    ]
    n = graph.vertex_count
    while len(lines) > n and not lines[-1][1].strip():
        lines.pop()
    if len(lines) != n:
        raise ParseError(
            f"expected {n} coloring lines, found {len(lines)}",
            lines[-1][0] if lines else 1,
        )
    rows = []
    for v in range(n):
        line_no, line = lines[v]
        colors = _int_tokens(line.split(), line_no)
        if len(colors) != graph.outdegree(v):
            raise ParseError(
                f"vertex {v}: expected {graph.outdegree(v)} colors, got {len(colors)}",
                line_no,
            )
        rows.append(tuple(colors))
    return Coloring(tuple(rows))


def emit_coloring(coloring: Coloring) -> str:
    return "\n".join(" ".join(map(str, row)) for row in coloring.color_of) + "\n"
