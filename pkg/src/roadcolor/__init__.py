"""Minimal-k synchronizing edge colorings of finite directed graphs.

A k-periodic strongly connected graph (uniform outdegree, cycle-length gcd
k) admits an edge coloring whose automaton has a word mapping all states
onto exactly k states, and no coloring does better.  This package computes
that minimal k, constructs such a coloring, and certifies the result with
exact desk-scale oracles.
"""

from .coloring import (
    ArbitraryColoringReport,
    Coloring,
    EngineResult,
    Partition,
    Provenance,
    RecursionStep,
    SpanningAnalysis,
    StablePairWitness,
    color_arbitrary,
    color_k_sync,
    color_k_sync_detailed,
    common_cycle_branch,
    congruence_closure,
    find_double_bunch,
    initial_coloring,
    is_congruence,
    is_cycle_of_bunches,
    lift_coloring,
    loop_branch,
    quotient,
    replacement_search,
    spanning_analysis,
)
from .dot import render_dot
from .formats import emit_coloring, emit_graph, parse_coloring, parse_graph
from .generate import generate, generate_multi_sink
from .graph import (
    Digraph,
    Periodicity,
    SccDecomposition,
    ValidationReport,
    minimal_k,
    periodicity,
    sccs,
    validate,
)
from .verify import (
    ColoredAutomaton,
    SyncReport,
    Verdict,
    apply_word,
    find_k_sync_word,
    is_stable_pair,
    min_image_exact,
    synchronizing_pairs,
    verify_coloring,
)

__all__ = [
    "ArbitraryColoringReport",
    "Coloring",
    "ColoredAutomaton",
    "Digraph",
    "EngineResult",
    "Partition",
    "Periodicity",
    "Provenance",
    "RecursionStep",
    "SccDecomposition",
    "SpanningAnalysis",
    "StablePairWitness",
    "SyncReport",
    "ValidationReport",
    "Verdict",
    "apply_word",
    "color_arbitrary",
    "color_k_sync",
    "color_k_sync_detailed",
    "common_cycle_branch",
    "congruence_closure",
    "emit_coloring",
    "emit_graph",
    "find_double_bunch",
    "find_k_sync_word",
    "generate",
    "generate_multi_sink",
    "initial_coloring",
    "is_congruence",
    "is_cycle_of_bunches",
    "is_stable_pair",
    "lift_coloring",
    "loop_branch",
    "min_image_exact",
    "minimal_k",
    "parse_coloring",
    "parse_graph",
    "periodicity",
    "quotient",
    "render_dot",
    "replacement_search",
    "sccs",
    "spanning_analysis",
    "synchronizing_pairs",
    "validate",
    "verify_coloring",
]

__version__ = "0.1.0"
