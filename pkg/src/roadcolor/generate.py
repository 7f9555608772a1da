"""Seeded random instance generation.

Instances are strongly connected uniform-outdegree graphs built from a
random covering cycle plus random extra slots.  When a target periodicity is
requested the extra slots are drawn from the compatible residue class along
the cycle and the result is rejection-sampled until the gcd comes out exact.
"""

from __future__ import annotations

import random

from .errors import GenerationFailed
from .graph import Digraph, periodicity


def generate(
    seed: int,
    n: int,
    d: int,
    target_k: int | None = None,
    max_retries: int = 200,
) -> Digraph:
    """Random strongly connected graph with n vertices of outdegree d.

    Deterministic per seed.  ``target_k`` must divide n: the construction
    always embeds an n-cycle, so the cycle gcd divides n.
    """
    if n < 1 or d < 1:
        raise GenerationFailed("need n >= 1 and d >= 1")
    if target_k is not None and not 1 <= target_k <= n:
        raise GenerationFailed(f"target_k {target_k} outside [1, {n}]")
    if target_k is not None and n % target_k != 0:
        raise GenerationFailed(
            f"target_k {target_k} does not divide n={n}; the covering cycle "
            "forces the periodicity to divide n"
        )
    rng = random.Random(seed)

    for _ in range(max_retries):
        order = rng.sample(range(n), n)
        pos = {v: i for i, v in enumerate(order)}
        if target_k is not None:
            buckets = [
                [v for v in range(n) if pos[v] % target_k == r]
                for r in range(target_k)
            ]
        rows = []
        for v in range(n):
            cycle_target = order[(pos[v] + 1) % n]
            cycle_slot = rng.randrange(d)
            row = []
            for slot in range(d):
                if slot == cycle_slot:
                    row.append(cycle_target)
                elif target_k is None:
                    row.append(rng.randrange(n))
                else:
                    pool = buckets[(pos[v] + 1) % target_k]
                    row.append(pool[rng.randrange(len(pool))])
            rows.append(tuple(row))
        graph = Digraph(tuple(rows))
        if target_k is None:
            return graph
        if periodicity(graph, range(n)).k == target_k:
            return graph
    raise GenerationFailed(
        f"no graph with periodicity {target_k} after {max_retries} attempts"
    )


def generate_multi_sink(
    seed: int,
    sink_specs: list[tuple[int, int, int | None]],
    source_count: int = 2,
    max_source_degree: int = 3,
) -> tuple[Digraph, tuple[tuple[frozenset[int], int], ...]]:
    """Digraph whose sink components are independently generated instances.

    ``sink_specs`` lists (n, d, target_k) per sink.  Source vertices are laid
    out after the sinks and only point at lower-numbered vertices, so they
    never form new sink components.  Returns the graph and the (vertex set,
    periodicity) of every sink.
    """
    rng = random.Random(seed)
    rows: list[tuple[int, ...]] = []
    sinks: list[tuple[frozenset[int], int]] = []
    offset = 0
    for n, d, target_k in sink_specs:
        sub = generate(rng.randrange(2**32), n, d, target_k)
        k = periodicity(sub, range(n)).k
        for v in range(n):
            rows.append(tuple(t + offset for t in sub.targets(v)))
        sinks.append((frozenset(range(offset, offset + n)), k))
        offset += n
    for _ in range(source_count):
        v = len(rows)
        deg = rng.randrange(1, max_source_degree + 1)
        rows.append(tuple(rng.randrange(v) for _ in range(deg)))
    return Digraph(tuple(rows)), tuple(sinks)
