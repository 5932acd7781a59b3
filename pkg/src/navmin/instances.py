"""Seeded random problem instances, JSON serialization, and the
experiment sweep that pairs both cost functions on the same graphs."""

from __future__ import annotations

import hashlib
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .graph import DirectedGraph, GraphError, dijkstra, make_grid_graph
from .measures import Task, validate_weights


class InfeasibleInstanceError(ValueError):
    pass


@dataclass(frozen=True)
class Provenance:
    seed: int
    grid_width: int
    grid_height: int
    drop_vertex_frac: float
    drop_edge_frac: float
    num_terminals: int
    cutoff_multiplier: float


@dataclass
class ProblemInstance:
    graph: DirectedGraph
    tasks: list  # sorted list of Task
    cutoffs: dict  # Task -> absolute cost bound
    weights: dict  # Task -> weight, summing to 1
    provenance: Optional[Provenance] = None
    _opt_costs: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        validate_weights(self.weights)

    def optimal_cost(self, task: Task) -> float:
        if task not in self._opt_costs:
            dist = dijkstra(self.graph, task.src)
            if task.dst not in dist:
                raise GraphError(f"task {task} unreachable")
            self._opt_costs[task] = dist[task.dst]
        return self._opt_costs[task]

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        doc = {}
        if self.provenance is not None:
            p = self.provenance
            full = make_grid_graph(p.grid_width, p.grid_height)
            doc["grid"] = {"width": p.grid_width, "height": p.grid_height}
            doc["removed_vertices"] = sorted(
                list(v) for v in full.vertices if v not in self.graph)
            doc["removed_edges"] = sorted(
                [list(u), list(v)] for u, v, _ in full.edges()
                if u in self.graph and v in self.graph
                and not self.graph.has_edge(u, v))
            doc["provenance"] = {
                "seed": p.seed,
                "grid_width": p.grid_width,
                "grid_height": p.grid_height,
                "drop_vertex_frac": p.drop_vertex_frac,
                "drop_edge_frac": p.drop_edge_frac,
                "num_terminals": p.num_terminals,
                "cutoff_multiplier": p.cutoff_multiplier,
            }
        else:
            doc["vertices"] = sorted(list(v) for v in self.graph.vertices)
            doc["edges"] = sorted(
                [list(u), list(v), w] for u, v, w in self.graph.edges())
        doc["tasks"] = [
            {"src": list(t.src), "dst": list(t.dst),
             "weight": self.weights[t], "cutoff": self.cutoffs[t]}
            for t in self.tasks
        ]
        return doc

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True,
                          separators=(",", ":"))

    def instance_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:12]

    @classmethod
    def from_json(cls, doc: dict) -> "ProblemInstance":
        graph = graph_from_json(doc)
        tasks = []
        cutoffs = {}
        weights = {}
        for entry in doc["tasks"]:
            t = Task(tuple(entry["src"]), tuple(entry["dst"]))
            tasks.append(t)
            cutoffs[t] = float(entry["cutoff"])
            weights[t] = float(entry["weight"])
        prov = None
        if "provenance" in doc:
            prov = Provenance(**doc["provenance"])
        return cls(graph=graph, tasks=sorted(tasks), cutoffs=cutoffs,
                   weights=weights, provenance=prov)


def graph_from_json(doc: dict) -> DirectedGraph:
    """Grid form (grid + removals) or explicit vertices/edges form."""
    if "grid" in doc:
        g = make_grid_graph(doc["grid"]["width"], doc["grid"]["height"])
        for v in doc.get("removed_vertices", []):
            g.remove_vertex(tuple(v))
        for u, v in doc.get("removed_edges", []):
            g.remove_edge(tuple(u), tuple(v))
        return g
    g = DirectedGraph()
    for v in doc["vertices"]:
        g.add_vertex(tuple(v) if isinstance(v, list) else v)
    for u, v, w in doc["edges"]:
        g.add_edge(tuple(u) if isinstance(u, list) else u,
                   tuple(v) if isinstance(v, list) else v, float(w))
    return g


def graph_to_json(graph: DirectedGraph) -> dict:
    return {
        "vertices": sorted(list(v) for v in graph.vertices),
        "edges": sorted([list(u), list(v), w] for u, v, w in graph.edges()),
    }


def random_instance(seed: int, grid_width: int, grid_height: int,
                    drop_vertex_frac: float, drop_edge_frac: float,
                    num_terminals: int, cutoff_multiplier: float,
                    max_terminal_retries: int = 100) -> ProblemInstance:
    """Grid with uniform vertex then edge drops (directed edges drop
    individually, so one-way corridors appear), isolated-vertex cleanup,
    uniform terminal selection with bounded resampling on infeasibility."""
    if not (0 <= drop_vertex_frac < 1 and 0 <= drop_edge_frac < 1):
        raise ValueError("drop fractions must be in [0, 1)")
    if num_terminals < 2:
        raise ValueError("need at least 2 terminals")
    if grid_width < 2 or grid_height < 2:
        raise ValueError("grid must be at least 2x2")

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed])))
    g = make_grid_graph(grid_width, grid_height)

    verts = sorted(g.vertices)
    n_vdrop = math.floor(drop_vertex_frac * len(verts))
    for i in rng.choice(len(verts), size=n_vdrop, replace=False):
        g.remove_vertex(verts[i])

    edges = sorted((u, v) for u, v, _ in g.edges())
    n_edrop = math.floor(drop_edge_frac * len(edges))
    for i in rng.choice(len(edges), size=n_edrop, replace=False):
        g.remove_edge(*edges[i])

    for v in [v for v in g.vertices
              if g.out_degree(v) == 0 and g.in_degree(v) == 0]:
        g.remove_vertex(v)

    remaining = sorted(g.vertices)
    if len(remaining) < num_terminals:
        raise InfeasibleInstanceError(
            f"only {len(remaining)} vertices remain, need {num_terminals}")

    for attempt in range(max_terminal_retries):
        terminals = sorted(
            remaining[i] for i in
            rng.choice(len(remaining), size=num_terminals, replace=False))
        opt = {}
        feasible = True
        for src in terminals:
            dist = dijkstra(g, src)
            for dst in terminals:
                if dst == src:
                    continue
                if dst not in dist:
                    feasible = False
                    break
                opt[Task(src, dst)] = dist[dst]
            if not feasible:
                break
        if feasible:
            break
    else:
        raise InfeasibleInstanceError(
            f"no mutually reachable terminal set of size {num_terminals} "
            f"found in {max_terminal_retries} attempts (seed {seed})")

    tasks = sorted(opt)
    cutoffs = {t: cutoff_multiplier * opt[t] for t in tasks}
    raw = rng.random(len(tasks))
    total = raw.sum()
    weights = {t: float(raw[i] / total) for i, t in enumerate(tasks)}
    inst = ProblemInstance(
        graph=g, tasks=tasks, cutoffs=cutoffs, weights=weights,
        provenance=Provenance(
            seed=seed, grid_width=grid_width, grid_height=grid_height,
            drop_vertex_frac=drop_vertex_frac, drop_edge_frac=drop_edge_frac,
            num_terminals=num_terminals, cutoff_multiplier=cutoff_multiplier))
    inst._opt_costs.update(opt)
    return inst


# -- sweep harness -------------------------------------------------------

DEFAULT_TERMINAL_COUNTS = (3, 4, 6, 8)
DEFAULT_CUTOFF_MULTIPLIERS = (1.0, 2.0, 3.0, 5.0)
DEFAULT_TERMINALS = 6
DEFAULT_MULTIPLIER = 3.0


@dataclass
class SweepConfig:
    terminal_counts: tuple = DEFAULT_TERMINAL_COUNTS
    cutoff_multipliers: tuple = DEFAULT_CUTOFF_MULTIPLIERS
    seeds: tuple = tuple(range(10))
    cost_functions: tuple = ("gsc", "bvc")
    grid_width: int = 20
    grid_height: int = 20
    drop_vertex_frac: float = 0.2
    drop_edge_frac: float = 0.2

    def __post_init__(self):
        for name in ("terminal_counts", "cutoff_multipliers", "seeds",
                     "cost_functions"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be nonempty")


CSV_COLUMNS = (
    "seed", "numTerminals", "cutoffMultiplier", "costFunction", "wpc",
    "nvNbv", "gsc", "bvc", "branchingVertexCount", "numVertices",
    "numEdges", "avgSuboptimality", "runtimeMs", "instanceHash", "error",
)


@dataclass
class ResultRow:
    seed: int
    num_terminals: int
    cutoff_multiplier: float
    cost_function: str
    wpc: float = math.nan
    nv_nbv: float = math.nan
    gsc: float = math.nan
    bvc: float = math.nan
    branching_vertex_count: int = -1
    num_vertices: int = -1
    num_edges: int = -1
    avg_suboptimality: float = math.nan
    runtime_ms: float = math.nan
    instance_hash: str = ""
    error: str = ""

    def to_csv_row(self) -> list:
        def num(x):
            if isinstance(x, float) and math.isinf(x):
                return "inf"
            return x
        return [self.seed, self.num_terminals, self.cutoff_multiplier,
                self.cost_function, num(self.wpc), num(self.nv_nbv),
                num(self.gsc), num(self.bvc), self.branching_vertex_count,
                self.num_vertices, self.num_edges,
                num(self.avg_suboptimality), num(self.runtime_ms),
                self.instance_hash, self.error]

    @classmethod
    def from_csv_row(cls, row: list) -> "ResultRow":
        return cls(
            seed=int(row[0]), num_terminals=int(row[1]),
            cutoff_multiplier=float(row[2]), cost_function=row[3],
            wpc=float(row[4]), nv_nbv=float(row[5]), gsc=float(row[6]),
            bvc=float(row[7]), branching_vertex_count=int(row[8]),
            num_vertices=int(row[9]), num_edges=int(row[10]),
            avg_suboptimality=float(row[11]), runtime_ms=float(row[12]),
            instance_hash=row[13], error=row[14])


def _run_cell(args):
    # module-level so the sweep can farm cells out to worker processes
    from .hillclimb import SearchConfig, minimize
    sweep, search_defaults, num_terminals, multiplier, seed = args
    rows = []
    try:
        inst = random_instance(
            seed, sweep.grid_width, sweep.grid_height,
            sweep.drop_vertex_frac, sweep.drop_edge_frac,
            num_terminals, multiplier)
    except (InfeasibleInstanceError, GraphError) as exc:
        return [ResultRow(seed=seed, num_terminals=num_terminals,
                          cutoff_multiplier=multiplier, cost_function=cf,
                          error=str(exc))
                for cf in sweep.cost_functions]
    h = inst.instance_hash()
    for cf in sweep.cost_functions:
        config = replace(search_defaults, cost_function=cf, master_seed=seed)
        t0 = time.perf_counter()
        try:
            _, rep, _ = minimize(inst, config)
        except Exception as exc:
            rows.append(ResultRow(
                seed=seed, num_terminals=num_terminals,
                cutoff_multiplier=multiplier, cost_function=cf,
                instance_hash=h, error=str(exc)))
            continue
        rows.append(ResultRow(
            seed=seed, num_terminals=num_terminals,
            cutoff_multiplier=multiplier, cost_function=cf,
            wpc=rep.wpc, nv_nbv=rep.nv_nbv, gsc=rep.gsc, bvc=rep.bvc,
            branching_vertex_count=rep.branching_vertex_count,
            num_vertices=rep.num_vertices, num_edges=rep.num_edges,
            avg_suboptimality=rep.avg_suboptimality,
            runtime_ms=(time.perf_counter() - t0) * 1000.0,
            instance_hash=h))
    return rows


def sweep_workers() -> int:
    cap = os.environ.get("NAVMIN_THREADS")
    if cap:
        return max(1, int(cap))
    return os.cpu_count() or 1


def run_sweep(sweep: SweepConfig, search_defaults=None) -> list:
    """One instance per (setting, seed), minimized under every cost
    function; rows ordered by (terminals, multiplier, seed, cost function)."""
    from .hillclimb import SearchConfig
    if search_defaults is None:
        search_defaults = SearchConfig()
    cells = [(sweep, search_defaults, nt, m, seed)
             for nt in sweep.terminal_counts
             for m in sweep.cutoff_multipliers
             for seed in sweep.seeds]
    workers = min(sweep_workers(), len(cells))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cell_rows = list(pool.map(_run_cell, cells))
    else:
        cell_rows = [_run_cell(c) for c in cells]
    rows = [row for rows_ in cell_rows for row in rows_]
    rows.sort(key=lambda r: (r.num_terminals, r.cutoff_multiplier, r.seed,
                             r.cost_function))
    return rows
