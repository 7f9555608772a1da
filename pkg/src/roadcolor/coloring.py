"""Construction of minimal-k synchronizing colorings.

The engine turns a k-periodic strongly connected graph into a deterministic
automaton whose minimal reachable image has exactly k states.  It works by
repeatedly finding a stable pair of vertices, closing it into a congruence,
coloring the quotient recursively and lifting the quotient's coloring back.

Stable pairs come from four branches, tried cheapest first:

* a self-loop lets one color form an in-tree and synchronize everything,
* two bunches entering one vertex are stable under every coloring,
* two cycles sharing a single vertex yield a one-maximal-tree subgraph,
* otherwise a hill-climb over one color's spanning subgraph (three kinds of
  single-edge replacement, adopted whenever the cycle edge count grows)
  ends in a subgraph whose deepest tree pins down a stable pair.

Every pair produced by the last two branches is re-checked with the
polynomial stability oracle before it is trusted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Sequence

from .errors import (
    BaseCase,
    Inapplicable,
    IncompleteColoring,
    InternalError,
    InvalidColoring,
    NotCongruent,
    NotStronglyConnected,
    NotSupported,
    NotUniform,
    NoValidColoring,
)
from .graph import (
    Digraph,
    Periodicity,
    find_loop_vertex,
    is_strongly_connected,
    minimal_k,
    periodicity,
    sccs,
    validate,
)


@dataclass(frozen=True)
class Coloring:
    """Per-vertex assignment of pairwise distinct colors to out-edge slots."""

    color_of: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.color_of)
        object.__setattr__(self, "color_of", rows)
        for v, row in enumerate(rows):
            if len(set(row)) != len(row):
                raise InvalidColoring(f"vertex {v} repeats a color: {row}")
            if any(c < 0 for c in row):
                raise InvalidColoring(f"vertex {v} uses a negative color")

    def slot_of_color(self, v: int, color: int) -> int | None:
        row = self.color_of[v]
        for slot, c in enumerate(row):
            if c == color:
                return slot
        return None


def transition_table(graph: Digraph, coloring: Coloring) -> tuple[tuple[int, ...], ...]:
    """delta[v][c] = successor of v under color c.

    Colors missing at a vertex act as self-loops, which completes automata
    built on graphs of mixed outdegree without ever merging states.
    """
    if len(coloring.color_of) != graph.vertex_count:
        raise InvalidColoring("coloring and graph disagree on vertex count")
    alphabet = 0
    for v in range(graph.vertex_count):
        if len(coloring.color_of[v]) != graph.outdegree(v):
            raise InvalidColoring(f"vertex {v}: coloring arity != outdegree")
        if coloring.color_of[v]:
            alphabet = max(alphabet, max(coloring.color_of[v]) + 1)
    table = []
    for v in range(graph.vertex_count):
        row = [v] * alphabet
        for slot, c in enumerate(coloring.color_of[v]):
            row[c] = graph.targets(v)[slot]
        table.append(tuple(row))
    return tuple(table)


# ---------------------------------------------------------------------------
# Spanning subgraphs of one color
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpanningAnalysis:
    """Cycle/tree decomposition of a functional graph (one out-edge each)."""

    next: tuple[int, ...]
    cycle_id: tuple[int | None, ...]
    level: tuple[int, ...]
    tree_root: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    cycle_edge_count: int
    max_level: int
    max_level_vertices: frozenset[int]

    def walk(self, v: int, steps: int) -> int:
        for _ in range(steps):
            v = self.next[v]
        return v


def analyze_successors(next_: Sequence[int]) -> SpanningAnalysis:
    n = len(next_)
    state = [0] * n  # 0 new, 1 on current walk, 2 finished
    cycle_id: list[int | None] = [None] * n
    level = [0] * n
    tree_root = list(range(n))
    cycles: list[tuple[int, ...]] = []

    for start in range(n):
        if state[start]:
            continue
        path: list[int] = []
        v = start
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = next_[v]
        if state[v] == 1:  # closed a new cycle inside this walk
            at = path.index(v)
            cyc = tuple(path[at:])
            cid = len(cycles)
            cycles.append(cyc)
            for u in cyc:
                cycle_id[u] = cid
                level[u] = 0
                tree_root[u] = u
                state[u] = 2
            head = path[:at]
        else:
            head = path
        for u in reversed(head):
            w = next_[u]
            level[u] = level[w] + 1
            tree_root[u] = w if level[w] == 0 else tree_root[w]
            state[u] = 2

    max_level = max(level) if n else 0
    max_vertices = frozenset(v for v in range(n) if level[v] == max_level)
    return SpanningAnalysis(
        next=tuple(next_),
        cycle_id=tuple(cycle_id),
        level=tuple(level),
        tree_root=tuple(tree_root),
        cycles=tuple(cycles),
        cycle_edge_count=sum(1 for v in range(n) if level[v] == 0),
        max_level=max_level,
        max_level_vertices=max_vertices,
    )


def spanning_analysis(graph: Digraph, coloring: Coloring, color: int) -> SpanningAnalysis:
    """Decompose the chosen color's edges into cycles and hanging trees."""
    next_ = []
    for v in range(graph.vertex_count):
        slot = coloring.slot_of_color(v, color)
        if slot is None:
            raise IncompleteColoring(f"vertex {v} has no edge of color {color}")
        next_.append(graph.targets(v)[slot])
    return analyze_successors(next_)


# ---------------------------------------------------------------------------
# Colorings
# ---------------------------------------------------------------------------


def uniform_outdegree(graph: Digraph) -> int:
    report = validate(graph)
    if report.uniform_outdegree is None:
        raise NotUniform("graph outdegree is not uniform")
    return report.uniform_outdegree


def initial_coloring(graph: Digraph) -> Coloring:
    """Slot j of every vertex gets color j."""
    d = uniform_outdegree(graph)
    return Coloring(tuple(tuple(range(d)) for _ in range(graph.vertex_count)))


def coloring_from_successors(graph: Digraph, next_: Sequence[int]) -> Coloring:
    """Color 0 realizes the given spanning subgraph; other slots follow in order."""
    rows = []
    for v in range(graph.vertex_count):
        targets = graph.targets(v)
        zero_slot = None
        for slot, t in enumerate(targets):
            if t == next_[v]:
                zero_slot = slot
                break
        if zero_slot is None:
            raise InvalidColoring(f"vertex {v} has no edge to {next_[v]}")
        row = [0] * len(targets)
        c = 1
        for slot in range(len(targets)):
            if slot != zero_slot:
                row[slot] = c
                c += 1
        rows.append(tuple(row))
    return Coloring(tuple(rows))


def is_cycle_of_bunches(graph: Digraph) -> bool:
    """True iff every vertex's out-edges form a bunch and those bunches close
    a single cycle through all vertices."""
    n = graph.vertex_count
    if n == 0:
        return False
    succ = []
    for v in range(n):
        ts = set(graph.targets(v))
        if len(ts) != 1:
            return False
        succ.append(ts.pop())
    seen = 0
    v = 0
    for _ in range(n):
        v = succ[v]
        seen += 1
        if v == 0:
            break
    return v == 0 and seen == n


# ---------------------------------------------------------------------------
# Stable-pair branches
# ---------------------------------------------------------------------------


class Provenance(enum.Enum):
    LOOP = "loop"
    DOUBLE_BUNCH = "double-bunch"
    COMMON_CYCLE_VERTEX = "common-cycle-vertex"
    REPLACEMENTS = "replacements"


@dataclass(frozen=True)
class StablePairWitness:
    p: int
    q: int
    coloring: Coloring
    provenance: Provenance
    fallback_used: bool = False


def find_double_bunch(graph: Digraph) -> tuple[int, int, int] | None:
    """Two distinct vertices q, r whose whole out-edge sets hit one vertex p.

    Returns (p, q, r) for the first such p in scan order, or None.
    """
    first_source: dict[int, int] = {}
    for q in range(graph.vertex_count):
        targets = set(graph.targets(q))
        if len(targets) != 1:
            continue
        p = targets.pop()
        if p in first_source and first_source[p] != q:
            return (p, first_source[p], q)
        first_source.setdefault(p, q)
    return None


def loop_branch(graph: Digraph, loop_vertex: int) -> Coloring:
    """Color a spanning in-tree to ``loop_vertex`` (plus its loop) with color 0.

    Under color 0 every vertex walks toward the loop vertex and stays there,
    so the resulting automaton is synchronizing (k = 1).
    """
    d = uniform_outdegree(graph)
    n = graph.vertex_count
    loop_slot = None
    for slot, t in enumerate(graph.targets(loop_vertex)):
        if t == loop_vertex:
            loop_slot = slot
            break
    if loop_slot is None:
        raise Inapplicable(f"vertex {loop_vertex} has no self-loop")

    # Reverse BFS from the loop vertex; each reached vertex records the slot
    # of the edge pointing one step closer.
    toward: list[int | None] = [None] * n
    toward[loop_vertex] = loop_slot
    incoming = graph.in_edges()
    queue = [loop_vertex]
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        for u, slot in incoming[w]:
            if toward[u] is None:
                toward[u] = slot
                queue.append(u)
    if any(s is None for s in toward):
        raise NotStronglyConnected("loop vertex is not reachable from every vertex")

    rows = []
    for v in range(n):
        row = [0] * d
        c = 1
        for slot in range(d):
            if slot != toward[v]:
                row[slot] = c
                c += 1
        rows.append(tuple(row))
    return Coloring(tuple(rows))


def _one_maximal_tree(sa: SpanningAnalysis) -> bool:
    if sa.max_level == 0:
        return False
    roots = {sa.tree_root[v] for v in sa.max_level_vertices}
    return len(roots) == 1


def stable_pair_candidate(sa: SpanningAnalysis) -> tuple[int, int] | None:
    """The Lemma-style pair read off a one-maximal-tree spanning subgraph.

    With p a deepest vertex (level L, lowest index on ties), r its tree root
    and H the root's cycle, the pair is (p advanced L-1 steps, p advanced
    L+|H|-1 steps): the tree-side and cycle-side predecessors of r.
    """
    if not _one_maximal_tree(sa):
        return None
    p = min(sa.max_level_vertices)
    L = sa.max_level
    r = sa.tree_root[p]
    h = len(sa.cycles[sa.cycle_id[r]])
    a = sa.walk(p, L - 1)
    b = sa.walk(p, L + h - 1)
    if a == b:
        return None
    return (a, b)


def _is_stable(graph: Digraph, coloring: Coloring, a: int, b: int) -> bool:
    from . import verify  # deferred: verify builds on this module's types

    return verify.is_stable_pair(verify.ColoredAutomaton.build(graph, coloring), a, b)


def common_cycle_branch(graph: Digraph, coloring: Coloring) -> SpanningAnalysis | None:
    """Fast branch: two cycles sharing exactly one vertex p1.

    The first cycle is a cycle of the color-0 spanning subgraph; the second
    is closed by an alternative out-edge of p1 whose subgraph walk returns to
    p1 before touching the first cycle again.  Whichever of the two edges at
    p1 leaves a single maximal tree is kept.  Returns the adjusted analysis,
    or None when no such pair of cycles is found.
    """
    sa = spanning_analysis(graph, coloring, 0)
    n = graph.vertex_count
    for p1 in range(n):
        if sa.level[p1] != 0:
            continue
        cu = sa.cycles[sa.cycle_id[p1]]
        cu_set = set(cu)
        for alt in graph.targets(p1):
            if alt == sa.next[p1] or alt in cu_set or alt == p1:
                continue
            # Follow the spanning subgraph from alt; succeed only if the walk
            # re-enters the first cycle exactly at p1.
            seen = {p1}
            v = alt
            ok = False
            while v not in seen:
                if v in cu_set:
                    break
                seen.add(v)
                v = sa.next[v]
            else:
                ok = False
            if v == p1:
                ok = True
            if not ok:
                continue

            option_a = sa  # keep the subgraph cycle edge at p1
            nxt_b = list(sa.next)
            nxt_b[p1] = alt
            option_b = analyze_successors(nxt_b)

            ordered = (option_a, option_b)
            if _one_maximal_tree(option_a):
                root = sa.tree_root[min(option_a.max_level_vertices)]
                if root in cu_set and root != p1:
                    # Deepest tree hangs on the first cycle: switching to the
                    # second cycle grows it past every other tree.
                    ordered = (option_b, option_a)
            else:
                ordered = (option_b, option_a)
            for opt in ordered:
                if _one_maximal_tree(opt) and stable_pair_candidate(opt):
                    return opt
    return None


def _climb_candidates(graph: Digraph, sa: SpanningAnalysis) -> list[tuple[int, int]]:
    """Single-edge replacements of the three kinds, in deterministic order.

    Each candidate is (vertex, new_target).  Kind 1 redirects any edge into
    the deepest vertex p; kinds 2 and 3 re-aim the tree-side and cycle-side
    predecessors of p's tree root.
    """
    p = min(sa.max_level_vertices)
    L = sa.max_level
    r = sa.tree_root[p]
    cyc = sa.cycles[sa.cycle_id[r]]
    p1 = sa.walk(p, L - 1)
    q = cyc[(cyc.index(r) - 1) % len(cyc)]

    cands: list[tuple[int, int]] = []
    for w in range(graph.vertex_count):
        if p in graph.targets(w) and sa.next[w] != p:
            cands.append((w, p))
    for t in graph.targets(p1):
        if t != sa.next[p1]:
            cands.append((p1, t))
    for t in graph.targets(q):
        if t != sa.next[q]:
            cands.append((q, t))
    return cands


def _consolidation_candidates(
    graph: Digraph, sa: SpanningAnalysis
) -> list[tuple[int, int]]:
    """The three replacement kinds applied per maximal tree, in scan order.

    Used when cycle edges cannot grow but the deepest vertices still spread
    over several trees: count-preserving replacements of the same three
    kinds re-hang or re-root trees until one maximal tree remains.
    """
    cands: list[tuple[int, int]] = []
    roots = sorted({sa.tree_root[v] for v in sa.max_level_vertices})
    for root in roots:
        p = min(v for v in sa.max_level_vertices if sa.tree_root[v] == root)
        cyc = sa.cycles[sa.cycle_id[root]]
        p1 = sa.walk(p, sa.max_level - 1)
        q = cyc[(cyc.index(root) - 1) % len(cyc)]
        for w in range(graph.vertex_count):
            if p in graph.targets(w) and sa.next[w] != p:
                cands.append((w, p))
        for t in graph.targets(p1):
            if t != sa.next[p1]:
                cands.append((p1, t))
        for t in graph.targets(q):
            if t != sa.next[q]:
                cands.append((q, t))
    return cands


def replacement_search(
    graph: Digraph, coloring: Coloring
) -> tuple[SpanningAnalysis, StablePairWitness]:
    """Rework the color-0 spanning subgraph until a stable pair can be read.

    Replacements that strictly grow the number of cycle edges are adopted
    first (first candidate in scan order); a treeless subgraph is perturbed
    by swapping in any non-subgraph edge.  When growth stops and the deepest
    vertices still spread over several trees, count-preserving replacements
    of the same three kinds are explored (never revisiting a subgraph,
    preferring moves that leave one maximal tree or deepen the maximal
    level) until a single maximal tree remains.  The pair read off that tree
    is verified with the stability oracle; on failure every maximal tree is
    tried before giving up.

    Raises BaseCase when the graph is a cycle of bunches (any coloring works)
    and InternalError when no candidate pair survives verification.
    """
    n = graph.vertex_count
    next_ = []
    for v in range(n):
        slot = coloring.slot_of_color(v, 0)
        if slot is None:
            raise IncompleteColoring(f"vertex {v} has no edge of color 0")
        next_.append(graph.targets(v)[slot])

    seen_plateaus: set[tuple[int, ...]] = set()
    d = max(graph.outdegree(v) for v in range(n))
    wander_budget = 20 * n * d + 50

    while True:
        sa = analyze_successors(next_)
        if sa.cycle_edge_count == n:
            if is_cycle_of_bunches(graph):
                raise BaseCase("graph is a cycle of bunches")
            # Disjoint-cycles subgraph: swap in any edge leaving its own
            # selection to create a tree.
            for w in range(n):
                swap = next(
                    (t for t in graph.targets(w) if t != next_[w]), None
                )
                if swap is not None:
                    next_[w] = swap
                    break
            continue

        base = sa.cycle_edge_count
        adopted = False
        for v, t in _climb_candidates(graph, sa):
            old = next_[v]
            next_[v] = t
            count = analyze_successors(next_).cycle_edge_count
            # A move onto the all-cycles subgraph is a dead end (no trees to
            # read a pair from), so it is never adopted.
            if base < count < n:
                adopted = True
                break
            next_[v] = old
        if adopted:
            continue

        if not _one_maximal_tree(sa) and wander_budget > 0:
            seen_plateaus.add(tuple(next_))
            fresh: tuple[int, int] | None = None
            for v, t in _consolidation_candidates(graph, sa):
                old = next_[v]
                next_[v] = t
                trial = analyze_successors(next_)
                if trial.cycle_edge_count == base:
                    if _one_maximal_tree(trial) or trial.max_level > sa.max_level:
                        adopted = True
                        break
                    if fresh is None and tuple(next_) not in seen_plateaus:
                        fresh = (v, t)
                next_[v] = old
            if not adopted and fresh is not None:
                next_[fresh[0]] = fresh[1]
                adopted = True
            if adopted:
                wander_budget -= 1
                continue

        recolored = coloring_from_successors(graph, next_)
        pair = stable_pair_candidate(sa)
        if pair is not None and _is_stable(graph, recolored, *pair):
            witness = StablePairWitness(*pair, recolored, Provenance.REPLACEMENTS)
            return sa, witness
        # Defensive fallback: read a candidate pair off every maximal tree.
        for root in sorted({sa.tree_root[v] for v in sa.max_level_vertices}):
            members = [
                v for v in sa.max_level_vertices if sa.tree_root[v] == root
            ]
            p = min(members)
            h = len(sa.cycles[sa.cycle_id[root]])
            a = sa.walk(p, sa.max_level - 1)
            b = sa.walk(p, sa.max_level + h - 1)
            if a != b and _is_stable(graph, recolored, a, b):
                witness = StablePairWitness(
                    a, b, recolored, Provenance.REPLACEMENTS, fallback_used=True
                )
                return sa, witness
        raise InternalError("no stable pair found at replacement fixpoint")


# ---------------------------------------------------------------------------
# Congruence closure, quotient, lift
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    class_of: tuple[int, ...]
    classes: tuple[frozenset[int], ...]
    edge_preimage: tuple[tuple[tuple[int, int], tuple[tuple[int, int], ...]], ...] | None = None

    def preimage_map(self) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
        return dict(self.edge_preimage or ())


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _partition_from_uf(n: int, uf: _UnionFind) -> Partition:
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    classes = tuple(frozenset(groups[r]) for r in sorted(groups))
    class_of = [0] * n
    for cid, cls in enumerate(classes):
        for v in cls:
            class_of[v] = cid
    return Partition(tuple(class_of), classes)


def congruence_closure(
    graph: Digraph, coloring: Coloring, seed: tuple[int, int]
) -> Partition:
    """Smallest equivalence containing ``seed`` and closed under every color."""
    delta = transition_table(graph, coloring)
    alphabet = len(delta[0]) if delta else 0
    uf = _UnionFind(graph.vertex_count)
    work = [seed]
    while work:
        a, b = work.pop()
        if not uf.union(a, b):
            continue
        for c in range(alphabet):
            na, nb = delta[a][c], delta[b][c]
            if na != nb:
                work.append((na, nb))
    return _partition_from_uf(graph.vertex_count, uf)


def is_congruence(graph: Digraph, coloring: Coloring, partition: Partition) -> bool:
    delta = transition_table(graph, coloring)
    alphabet = len(delta[0]) if delta else 0
    for cls in partition.classes:
        for c in range(alphabet):
            images = {partition.class_of[delta[v][c]] for v in cls}
            if len(images) != 1:
                return False
    return True


def quotient(
    graph: Digraph, coloring: Coloring, partition: Partition
) -> tuple[Digraph, Partition]:
    """Merge congruence classes; quotient slot c carries the color-c edges.

    Also fills the partition's edge-preimage map: quotient edge (class, c)
    represents every color-c edge leaving the class in the parent.
    """
    if not is_congruence(graph, coloring, partition):
        raise NotCongruent("partition is not a congruence for this coloring")
    delta = transition_table(graph, coloring)
    alphabet = len(delta[0]) if delta else 0
    rows = []
    preimage: list[tuple[tuple[int, int], tuple[tuple[int, int], ...]]] = []
    for cid, cls in enumerate(partition.classes):
        rep = min(cls)
        rows.append(tuple(partition.class_of[delta[rep][c]] for c in range(alphabet)))
        for c in range(alphabet):
            edges = tuple(
                (v, slot)
                for v in sorted(cls)
                for slot, col in enumerate(coloring.color_of[v])
                if col == c
            )
            preimage.append(((cid, c), edges))
    q = Digraph(tuple(rows))
    return q, replace(partition, edge_preimage=tuple(preimage))


def lift_coloring(
    parent: Digraph, partition: Partition, child_coloring: Coloring
) -> Coloring:
    """Give every parent edge the color its image edge carries in the child."""
    rows = [[-1] * parent.outdegree(v) for v in range(parent.vertex_count)]
    for (cid, c), edges in partition.preimage_map().items():
        child_color = child_coloring.color_of[cid][c]
        for v, slot in edges:
            rows[v][slot] = child_color
    return Coloring(tuple(tuple(row) for row in rows))


# ---------------------------------------------------------------------------
# Main recursion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecursionStep:
    """One stable-pair/quotient round of the engine, kept for auditing."""

    graph: Digraph
    coloring: Coloring
    witness: StablePairWitness
    partition: Partition
    quotient_graph: Digraph


@dataclass(frozen=True)
class EngineResult:
    coloring: Coloring
    k: int
    steps: tuple[RecursionStep, ...]


def color_k_sync_detailed(graph: Digraph) -> EngineResult:
    if graph.vertex_count == 0:
        raise NotStronglyConnected("empty graph")
    if not is_strongly_connected(graph):
        raise NotStronglyConnected("graph is not strongly connected")
    d = uniform_outdegree(graph)
    if d < 1:
        raise NotUniform("outdegree must be at least 1")
    per = periodicity(graph, range(graph.vertex_count))
    k = per.k
    steps: list[RecursionStep] = []
    coloring = _color_recursive(graph, k, steps)
    return EngineResult(coloring, k, tuple(steps))


def _color_recursive(graph: Digraph, k: int, steps: list[RecursionStep]) -> Coloring:
    n = graph.vertex_count
    if n == k or is_cycle_of_bunches(graph):
        return initial_coloring(graph)

    loop_vertex = find_loop_vertex(graph)
    if loop_vertex is not None:
        return loop_branch(graph, loop_vertex)

    coloring = initial_coloring(graph)
    witness: StablePairWitness | None = None

    bunch = find_double_bunch(graph)
    if bunch is not None:
        _, a, b = bunch
        witness = StablePairWitness(a, b, coloring, Provenance.DOUBLE_BUNCH)

    if witness is None:
        sa = common_cycle_branch(graph, coloring)
        if sa is not None:
            pair = stable_pair_candidate(sa)
            recolored = coloring_from_successors(graph, sa.next)
            if pair is not None and _is_stable(graph, recolored, *pair):
                coloring = recolored
                witness = StablePairWitness(
                    *pair, recolored, Provenance.COMMON_CYCLE_VERTEX
                )

    if witness is None:
        try:
            _, witness = replacement_search(graph, coloring)
        except BaseCase:
            return initial_coloring(graph)
        coloring = witness.coloring

    partition = congruence_closure(graph, coloring, (witness.p, witness.q))
    qgraph, partition = quotient(graph, coloring, partition)
    steps.append(RecursionStep(graph, coloring, witness, partition, qgraph))
    child = _color_recursive(qgraph, k, steps)
    return lift_coloring(graph, partition, child)


def color_k_sync(graph: Digraph) -> tuple[Coloring, int]:
    """Minimal-k synchronizing coloring of a strongly connected graph."""
    result = color_k_sync_detailed(graph)
    return result.coloring, result.k


@dataclass(frozen=True)
class ArbitraryColoringReport:
    total_k: int
    sinks: tuple[tuple[frozenset[int], int], ...]
    alphabet_size: int


def color_arbitrary(graph: Digraph) -> tuple[Coloring, int, ArbitraryColoringReport]:
    """Coloring of an arbitrary digraph: sinks get synchronizing colorings,
    every other edge is colored by slot order.

    The minimal image size of the whole automaton is the sum of the sink
    components' periodicities.
    """
    try:
        total, per_sink = minimal_k(graph)
    except NoValidColoring as exc:
        raise NotSupported(str(exc)) from exc

    dec = sccs(graph)
    sink_ids = set(dec.sinks())
    rows: list[tuple[int, ...]] = [
        tuple(range(graph.outdegree(v))) for v in range(graph.vertex_count)
    ]
    for cid in dec.sinks():
        comp = sorted(dec.components[cid])
        local_of = {v: i for i, v in enumerate(comp)}
        sub = Digraph(
            tuple(tuple(local_of[t] for t in graph.targets(v)) for v in comp)
        )
        sub_coloring, _ = color_k_sync(sub)
        for v in comp:
            rows[v] = sub_coloring.color_of[local_of[v]]
    coloring = Coloring(tuple(rows))
    alphabet = max(
        (graph.outdegree(v) for v in range(graph.vertex_count)), default=0
    )
    report = ArbitraryColoringReport(total, per_sink, alphabet)
    return coloring, total, report
