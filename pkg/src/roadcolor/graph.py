"""Digraph representation, SCC/condensation analysis and periodicity.

Vertices are integers ``0..n-1``.  Parallel edges and self-loops are
permitted; an edge is identified by ``(source, slot)`` where ``slot`` is the
position in the source's ordered out-edge sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidGraph, NotStronglyConnected, NoValidColoring


@dataclass(frozen=True)
class Digraph:
    """Immutable directed multigraph with per-vertex ordered out-edges."""

    out_edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.out_edges)
        object.__setattr__(self, "out_edges", rows)
        n = len(rows)
        for v, row in enumerate(rows):
            for slot, t in enumerate(row):
                if not isinstance(t, int) or not 0 <= t < n:
                    raise InvalidGraph(
                        f"edge ({v},{slot}) targets {t!r}, outside [0,{n})",
                        edge=(v, slot),
                    )

    @classmethod
    def from_lists(cls, rows: Iterable[Iterable[int]]) -> "Digraph":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def vertex_count(self) -> int:
        return len(self.out_edges)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.out_edges)

    def outdegree(self, v: int) -> int:
        return len(self.out_edges[v])

    def targets(self, v: int) -> tuple[int, ...]:
        return self.out_edges[v]

    def in_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each vertex, the edges ``(source, slot)`` entering it."""
        acc: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for v, row in enumerate(self.out_edges):
            for slot, t in enumerate(row):
                acc[t].append((v, slot))
        return tuple(tuple(lst) for lst in acc)


@dataclass(frozen=True)
class ValidationReport:
    uniform_outdegree: int | None
    has_loop: bool
    vertex_count: int
    edge_count: int


def validate(graph: Digraph) -> ValidationReport:
    """Basic structural facts; target ids were already range-checked."""
    degs = {graph.outdegree(v) for v in range(graph.vertex_count)}
    uniform = degs.pop() if len(degs) == 1 else None
    has_loop = any(
        t == v for v in range(graph.vertex_count) for t in graph.targets(v)
    )
    return ValidationReport(uniform, has_loop, graph.vertex_count, graph.edge_count)


def find_loop_vertex(graph: Digraph) -> int | None:
    """Lowest vertex carrying a self-loop, if any."""
    for v in range(graph.vertex_count):
        if v in graph.targets(v):
            return v
    return None


@dataclass(frozen=True)
class SccDecomposition:
    component_id: tuple[int, ...]
    components: tuple[frozenset[int], ...]
    condensation_edges: frozenset[tuple[int, int]]
    sink_flags: tuple[bool, ...]

    def sinks(self) -> tuple[int, ...]:
        return tuple(c for c, s in enumerate(self.sink_flags) if s)


def sccs(graph: Digraph) -> SccDecomposition:
    """Strongly connected components via iterative Tarjan.

    Components are renumbered by their smallest member so the decomposition
    is independent of traversal order.
    """
    n = graph.vertex_count
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_of = [-1] * n
    raw_components: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # Explicit DFS stack: (vertex, iterator position over its targets).
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            row = graph.out_edges[v]
            while i < len(row):
                w = row[i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                raw_components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    order = sorted(range(len(raw_components)), key=lambda c: min(raw_components[c]))
    components = tuple(frozenset(raw_components[c]) for c in order)
    for cid, comp in enumerate(components):
        for v in comp:
            comp_of[v] = cid

    cond: set[tuple[int, int]] = set()
    for v in range(n):
        for t in graph.targets(v):
            if comp_of[v] != comp_of[t]:
                cond.add((comp_of[v], comp_of[t]))
    sink_flags = tuple(
        all(a != c for a, _ in cond) for c in range(len(components))
    )
    return SccDecomposition(tuple(comp_of), components, frozenset(cond), sink_flags)


def is_strongly_connected(graph: Digraph) -> bool:
    return graph.vertex_count > 0 and len(sccs(graph).components) == 1


@dataclass(frozen=True)
class Periodicity:
    """gcd of all cycle lengths of a strongly connected component.

    ``n_labels`` assigns each component vertex a residue in ``[0, k)`` such
    that every in-component edge advances the residue by exactly one.
    Vertices outside the component carry label -1.
    """

    k: int
    n_labels: tuple[int, ...]


def periodicity(graph: Digraph, component: Iterable[int], root: int | None = None) -> Periodicity:
    """Cycle-length gcd of a strongly connected vertex set.

    BFS from ``root`` (default: lowest-indexed member) assigns each vertex a
    distance label N; every in-component edge r->q then contributes
    ``|N(r)+1-N(q)|`` to a running gcd.  Tree edges contribute 0 and for a
    bare cycle the closing edge contributes the full cycle length, so the
    accumulator ends at the gcd of all cycle lengths.
    """
    comp = frozenset(component)
    if not comp:
        raise NotStronglyConnected("empty component")
    n = graph.vertex_count
    start = min(comp) if root is None else root
    if start not in comp:
        raise NotStronglyConnected(f"root {start} not in component")

    dist = {start: 0}
    queue = [start]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for t in graph.targets(v):
            if t in comp and t not in dist:
                dist[t] = dist[v] + 1
                queue.append(t)
    if set(dist) != comp:
        raise NotStronglyConnected("component is not strongly connected")

    g = 0
    has_edge = False
    for v in comp:
        for t in graph.targets(v):
            if t in comp:
                has_edge = True
                g = gcd(g, abs(dist[v] + 1 - dist[t]))
    if not has_edge:
        raise NotStronglyConnected("component has no internal edge")
    if g == 0:
        # Unreachable for a strongly connected set with an edge: any edge
        # closing the BFS tree yields a positive difference.
        raise NotStronglyConnected("no cycle found in component")

    labels = [-1] * n
    for v in comp:
        labels[v] = dist[v] % g
    return Periodicity(g, tuple(labels))


def minimal_k(graph: Digraph) -> tuple[int, tuple[tuple[frozenset[int], int], ...]]:
    """Minimal k over all colorings: the sum of sink-component periodicities.

    Every sink component must have uniform outdegree (at least one); other
    shapes have no supported synchronizing coloring here.
    """
    if graph.vertex_count == 0:
        raise NoValidColoring("graph has no vertices")
    dec = sccs(graph)
    per_sink: list[tuple[frozenset[int], int]] = []
    for cid in dec.sinks():
        comp = dec.components[cid]
        degs = {graph.outdegree(v) for v in comp}
        if 0 in degs:
            raise NoValidColoring(
                f"sink component {sorted(comp)} contains a dead-end vertex"
            )
        if len(degs) != 1:
            raise NoValidColoring(
                f"sink component {sorted(comp)} has mixed outdegrees {sorted(degs)}"
            )
        per_sink.append((comp, periodicity(graph, comp).k))
    total = sum(k for _, k in per_sink)
    return total, tuple(per_sink)
