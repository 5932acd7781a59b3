"""Command-line interface: instance generation, minimization, the
experiment sweep, and the collision fixture checker.

Exit codes: 0 success, 2 usage, 3 infeasible instance, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from .candidates import InfeasibleTaskError
from .conflict import ConflictFixture, earliest_collision
from .graph import DirectedGraph, GraphError
from .hillclimb import SearchConfig, minimize
from .instances import (
    DEFAULT_MULTIPLIER,
    DEFAULT_TERMINALS,
    CSV_COLUMNS,
    InfeasibleInstanceError,
    ProblemInstance,
    SweepConfig,
    graph_to_json,
    random_instance,
    run_sweep,
)

EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4


def _fmt(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def report_to_json(rep) -> dict:
    return {
        "wpc": rep.wpc,
        "nvNbv": _fmt(rep.nv_nbv),
        "gsc": rep.gsc,
        "bvc": rep.bvc,
        "branchingVertexCount": rep.branching_vertex_count,
        "numVertices": rep.num_vertices,
        "numEdges": rep.num_edges,
        "avgSuboptimality": rep.avg_suboptimality,
    }


def graph_to_dot(graph: DirectedGraph, terminals=()) -> str:
    """Graphviz DOT: terminal vertices blue, branching vertices red."""
    terminals = set(terminals)
    lines = ["digraph navgraph {", "  node [shape=circle];"]
    def name(v):
        return '"' + ",".join(str(x) for x in v) + '"' \
            if isinstance(v, tuple) else f'"{v}"'
    for v in sorted(graph.vertices):
        attrs = []
        if v in terminals:
            attrs.append("color=blue")
            attrs.append("style=filled")
            attrs.append("fillcolor=lightblue")
        if graph.out_degree(v) > 1:
            attrs.append("color=red")
            if "style=filled" not in attrs:
                attrs.append("style=filled")
            attrs.append("fillcolor=salmon")
        lines.append(f"  {name(v)}" +
                     (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v, w in sorted(graph.edges()):
        lines.append(f"  {name(u)} -> {name(v)} [label={w:g}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_grid(text: str):
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"grid must look like 20x20, got {text!r}")


def _parse_seed_range(text: str):
    if ".." in text:
        lo, hi = text.split("..")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(s) for s in text.split(","))


def cmd_generate(args) -> int:
    try:
        w, h = args.grid
        inst = random_instance(args.seed, w, h, args.drop_vertices,
                               args.drop_edges, args.terminals, args.cutoff)
    except (InfeasibleInstanceError, GraphError) as exc:
        print(f"error: infeasible instance: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    try:
        with open(args.out, "w") as fh:
            fh.write(inst.canonical_json())
            fh.write("\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def cmd_minimize(args) -> int:
    try:
        with open(args.instance) as fh:
            inst = ProblemInstance.from_json(json.load(fh))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (KeyError, ValueError, TypeError) as exc:
        print(f"error: malformed instance file: {exc!r}", file=sys.stderr)
        return EXIT_USAGE
    config = SearchConfig(cost_function=args.cost, restart_count=args.restarts,
                          master_seed=args.seed)
    try:
        nav, rep, trace = minimize(inst, config)
    except (InfeasibleTaskError, GraphError) as exc:
        print(f"error: infeasible instance: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    doc = {"graph": graph_to_json(nav), "report": report_to_json(rep)}
    try:
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(doc, fh, sort_keys=True, indent=2)
                fh.write("\n")
        if args.dot:
            terminals = {t.src for t in inst.tasks} | {t.dst for t in inst.tasks}
            with open(args.dot, "w") as fh:
                fh.write(graph_to_dot(nav, terminals))
        if args.trace:
            with open(args.trace, "w") as fh:
                json.dump(trace.to_json(), fh, indent=2)
                fh.write("\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(json.dumps(report_to_json(rep), sort_keys=True))
    return 0


def cmd_sweep(args) -> int:
    if args.vary == "cutoff":
        sweep = SweepConfig(terminal_counts=(DEFAULT_TERMINALS,),
                            seeds=args.seeds)
    else:
        sweep = SweepConfig(cutoff_multipliers=(DEFAULT_MULTIPLIER,),
                            seeds=args.seeds)
    rows = run_sweep(sweep, SearchConfig(restart_count=args.restarts))
    errors = sum(1 for r in rows if r.error)
    try:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for row in rows:
                writer.writerow(row.to_csv_row())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if errors:
        print(f"warning: {errors} error rows", file=sys.stderr)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_collide(args) -> int:
    try:
        fixture = ConflictFixture.load(args.fixture)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (KeyError, ValueError, TypeError, GraphError) as exc:
        print(f"error: malformed fixture: {exc!r}", file=sys.stderr)
        return EXIT_USAGE
    step = earliest_collision(fixture.robots, fixture.human)
    print("none" if step is None else step)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="navmin",
        description="Minimize robot navigation graphs for position-based "
                    "predictability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a random problem instance")
    p.add_argument("--seed", type=int, default=0, help="instance RNG seed")
    p.add_argument("--grid", type=_parse_grid, default=(20, 20),
                   metavar="WxH", help="grid size (default 20x20)")
    p.add_argument("--drop-vertices", type=float, default=0.2,
                   help="fraction of vertices to drop (default 0.2)")
    p.add_argument("--drop-edges", type=float, default=0.2,
                   help="fraction of remaining edges to drop (default 0.2)")
    p.add_argument("--terminals", type=int, default=DEFAULT_TERMINALS,
                   help="number of terminal vertices (default 6)")
    p.add_argument("--cutoff", type=float, default=DEFAULT_MULTIPLIER,
                   help="cutoff as a multiple of each task's optimal cost")
    p.add_argument("--out", required=True, help="output instance JSON file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("minimize", help="minimize an instance's graph")
    p.add_argument("--instance", required=True, help="instance JSON file")
    p.add_argument("--cost", choices=("gsc", "bvc"), default="bvc",
                   help="search cost function (default bvc)")
    p.add_argument("--restarts", type=int, default=5,
                   help="random restarts (default 5)")
    p.add_argument("--seed", type=int, default=0, help="search RNG seed")
    p.add_argument("--out", help="minimized graph + report JSON file")
    p.add_argument("--dot", help="Graphviz DOT export of the result")
    p.add_argument("--trace", help="search trace JSON file")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("sweep", help="run the experiment sweep")
    p.add_argument("--vary", choices=("cutoff", "terminals"), required=True,
                   help="which parameter to vary")
    p.add_argument("--seeds", type=_parse_seed_range, default=tuple(range(10)),
                   metavar="LO..HI", help="seed range (default 0..9)")
    p.add_argument("--restarts", type=int, default=5,
                   help="random restarts per run (default 5)")
    p.add_argument("--out", required=True, help="output CSV file")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("collide", help="earliest collision in a fixture")
    p.add_argument("--fixture", required=True, help="fixture JSON file")
    p.set_defaults(func=cmd_collide)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "terminals", 2) < 2:
        print("error: --terminals must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
