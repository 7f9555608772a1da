"""Command-line interface.

Subcommands: ``analyze`` (SCCs, sinks, minimal k), ``color`` (build and
certify a coloring), ``verify`` (check a claimed k), ``gen`` (seeded random
instances) and ``render`` (DOT and optional matplotlib figure).  Errors map
to distinct exit codes with messages on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import errors
from .coloring import color_arbitrary
from .dot import render_dot
from .formats import emit_coloring, emit_graph, parse_coloring, parse_graph
from .generate import generate
from .graph import minimal_k, sccs
from .verify import DEFAULT_ORACLE_GUARD, Verdict, verify_coloring

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CODES: dict[type, int] = {
    errors.ParseError: 2,
    errors.InvalidGraph: 3,
    errors.InvalidColoring: 4,
    errors.NotStronglyConnected: 5,
    errors.NotUniform: 6,
    errors.NoValidColoring: 7,
    errors.NotSupported: 8,
    errors.GenerationFailed: 9,
    errors.TooLarge: 10,
    errors.NotAchievable: 11,
    errors.BadWord: 12,
    errors.InternalError: 13,
}
EXIT_IO_ERROR = 14
EXIT_OTHER = 15


@dataclass
class RunConfig:
    """One CLI invocation; the seed fully determines ``gen`` output."""

    command: str
    input_path: str | None = None
    coloring_path: str | None = None
    out_path: str | None = None
    report_path: str | None = None
    figure_path: str | None = None
    seed: int = 0
    n: int = 1
    d: int = 1
    target_k: int | None = None
    k_claimed: int | None = None
    oracle_guard: int = DEFAULT_ORACLE_GUARD
    fmt: str = "text"

    def __post_init__(self):
        if self.oracle_guard < 1:
            raise errors.RoadColorError("oracle guard must be at least 1")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _analyze_payload(cfg: RunConfig) -> dict:
    graph = parse_graph(_read(cfg.input_path))
    dec = sccs(graph)
    total, per_sink = minimal_k(graph)
    return {
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "component_count": len(dec.components),
        "components": [
            {"vertices": sorted(c), "sink": dec.sink_flags[i]}
            for i, c in enumerate(dec.components)
        ],
        "sinks": [
            {"vertices": sorted(comp), "k": k} for comp, k in per_sink
        ],
        "total_k": total,
    }


def _analyze_text(payload: dict) -> str:
    lines = [
        f"vertices: {payload['vertices']}",
        f"edges: {payload['edges']}",
        f"component_count: {payload['component_count']}",
    ]
    for i, comp in enumerate(payload["components"]):
        flag = "yes" if comp["sink"] else "no"
        members = " ".join(map(str, comp["vertices"]))
        lines.append(f"component {i}: sink={flag} vertices={members}")
    for i, sink in enumerate(payload["sinks"]):
        members = " ".join(map(str, sink["vertices"]))
        lines.append(f"sink {i}: k={sink['k']} vertices={members}")
    lines.append(f"total_k: {payload['total_k']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    payload = _analyze_payload(cfg)
    if cfg.fmt == "json":
        _write(cfg.out_path, json.dumps(payload, indent=2) + "\n")
    else:
        _write(cfg.out_path, _analyze_text(payload))
    return EXIT_OK


def cmd_color(cfg: RunConfig) -> int:
    graph = parse_graph(_read(cfg.input_path))
    coloring, k, _ = color_arbitrary(graph)
    _write(cfg.out_path, emit_coloring(coloring))
    report = verify_coloring(graph, coloring, k, cfg.oracle_guard)
    if cfg.fmt == "json":
        _write(cfg.report_path, json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        _write(cfg.report_path, report.to_text() + "\n")
    if cfg.figure_path:
        from .viz import save_figure

        save_figure(cfg.figure_path, graph, coloring)
    return EXIT_OK if report.verdict != Verdict.FAILED else EXIT_VERIFY_FAILED


def cmd_verify(cfg: RunConfig) -> int:
    graph = parse_graph(_read(cfg.input_path))
    coloring = parse_coloring(_read(cfg.coloring_path), graph)
    report = verify_coloring(graph, coloring, cfg.k_claimed, cfg.oracle_guard)
    if cfg.fmt == "json":
        _write(cfg.out_path, json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        _write(cfg.out_path, report.to_text() + "\n")
    return EXIT_OK if report.verdict != Verdict.FAILED else EXIT_VERIFY_FAILED


def cmd_gen(cfg: RunConfig) -> int:
    graph = generate(cfg.seed, cfg.n, cfg.d, cfg.target_k)
    _write(cfg.out_path, emit_graph(graph))
    return EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    graph = parse_graph(_read(cfg.input_path))
    coloring = None
    if cfg.coloring_path:
        coloring = parse_coloring(_read(cfg.coloring_path), graph)
    _write(cfg.out_path, render_dot(graph, coloring))
    if cfg.figure_path:
        from .viz import save_figure

        save_figure(cfg.figure_path, graph, coloring)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roadcolor",
        description="Minimal-k synchronizing colorings of directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("analyze", help="SCCs, sink components and minimal k")
    p.add_argument("input", help="graph file ('-' for stdin)")
    add_common(p)

    p = sub.add_parser("color", help="construct and certify a coloring")
    p.add_argument("input", help="graph file ('-' for stdin)")
    add_common(p)
    p.add_argument("--report", default=None, help="report path (default stdout)")
    p.add_argument("--oracle-guard", type=int, default=DEFAULT_ORACLE_GUARD)
    p.add_argument("--figure", default=None, help="also render a figure (png/svg)")

    p = sub.add_parser("verify", help="check a coloring against a claimed k")
    p.add_argument("input", help="graph file")
    p.add_argument("coloring", help="coloring file")
    p.add_argument("k", type=int, help="claimed minimal image size")
    add_common(p)
    p.add_argument("--oracle-guard", type=int, default=DEFAULT_ORACLE_GUARD)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="target periodicity")
    p.add_argument("--out", default=None)

    p = sub.add_parser("render", help="export DOT (and optionally a figure)")
    p.add_argument("input", help="graph file")
    p.add_argument("--coloring", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--figure", default=None)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        coloring_path=getattr(args, "coloring", None),
        out_path=getattr(args, "out", None),
        report_path=getattr(args, "report", None),
        figure_path=getattr(args, "figure", None),
        seed=getattr(args, "seed", 0),
        n=getattr(args, "n", 1),
        d=getattr(args, "d", 1),
        target_k=getattr(args, "k", None) if args.command == "gen" else None,
        k_claimed=getattr(args, "k", None) if args.command == "verify" else None,
        oracle_guard=getattr(args, "oracle_guard", DEFAULT_ORACLE_GUARD),
        fmt=getattr(args, "format", "text"),
    )


COMMANDS = {
    "analyze": cmd_analyze,
    "color": cmd_color,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "render": cmd_render,
}


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except errors.RoadColorError as exc:
        print(f"roadcolor {args.command}: {exc}", file=sys.stderr)
        for etype, code in EXIT_CODES.items():
            if isinstance(exc, etype):
                return code
        return EXIT_OTHER
    except OSError as exc:
        print(f"roadcolor {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
