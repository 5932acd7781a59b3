"""Predictability and search-cost measures over a set of task paths.

All out-degrees are taken in the union subgraph of the chosen paths (the
navigation graph an observer actually sees), not in the original motion
graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .graph import (
    DirectedGraph,
    GraphError,
    Path,
    VertexId,
    min_branch_shortest_path,
    path_cost,
    union_subgraph,
    validate_path,
)

WEIGHT_SUM_TOL = 1e-9


class Task(NamedTuple):
    src: VertexId
    dst: VertexId


TaskWeights = dict  # Task -> weight in [0, 1), summing to 1


def validate_weights(weights: TaskWeights) -> None:
    if any(w < 0 for w in weights.values()):
        raise ValueError("task weights must be nonnegative")
    total = sum(weights.values())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"task weights must sum to 1, got {total}")


@dataclass
class Solution:
    """One chosen path per task plus the host graph the paths live in."""

    chosen: dict  # Task -> Path
    host: DirectedGraph

    def validate(self) -> None:
        for task, path in self.chosen.items():
            validate_path(self.host, path)
            if path[0] != task.src or path[-1] != task.dst:
                raise ValueError(f"path endpoints do not match task {task}")

    def union_graph(self) -> DirectedGraph:
        return union_subgraph(self.host, self.chosen.values())

    def sorted_tasks(self):
        return sorted(self.chosen)


@dataclass
class PredictabilityReport:
    wpc: float
    nv_nbv: float  # math.inf when there are no branching vertices
    gsc: float
    bvc: float
    branching_vertex_count: int
    num_vertices: int
    num_edges: int
    avg_suboptimality: float


def _require_weights(solution: Solution, weights: TaskWeights) -> None:
    for task in solution.chosen:
        if task not in weights:
            raise ValueError(f"task {task} missing from weights")


def _wpc_factors(solution: Solution, weights: TaskWeights,
                 union: Optional[DirectedGraph] = None):
    """(weighted branching-vertex count, weighted out-degree sum,
    weighted vertex count) over all task-path vertices."""
    _require_weights(solution, weights)
    if union is None:
        union = solution.union_graph()
    f1 = 0.0
    f2 = 0.0
    wtot = 0.0
    for task in solution.sorted_tasks():
        w = weights[task]
        for v in solution.chosen[task]:
            d = union.out_degree(v)
            f2 += w * d
            if d > 1:
                f1 += w
            wtot += w
    return f1, f2, wtot


def wpc(solution: Solution, weights: TaskWeights) -> float:
    """Weighted prediction cost: branching-vertex mass times out-degree mass."""
    f1, f2, _ = _wpc_factors(solution, weights)
    return f1 * f2


def nv_nbv(solution: Solution, weights: TaskWeights) -> float:
    """Weighted vertices per branching vertex; inf when none branch."""
    f1, _, wtot = _wpc_factors(solution, weights)
    if f1 == 0.0:
        return math.inf
    return wtot / f1


def gsc(solution: Solution, weights: TaskWeights) -> float:
    """Graph-size cost: per-element max task weight, summed over the union
    subgraph's edges and vertices."""
    _require_weights(solution, weights)
    edge_max = {}
    vert_max = {}
    for task in solution.sorted_tasks():
        w = weights[task]
        path = solution.chosen[task]
        for v in path:
            if v not in vert_max or w > vert_max[v]:
                vert_max[v] = w
        for e in zip(path, path[1:]):
            if e not in edge_max or w > edge_max[e]:
                edge_max[e] = w
    return sum(edge_max.values()) + sum(vert_max.values())


def bvc(solution: Solution, weights: TaskWeights) -> float:
    return wpc(solution, weights) * gsc(solution, weights)


def solution_cost(solution: Solution, weights: TaskWeights,
                  cost_function: str) -> float:
    if cost_function == "gsc":
        return gsc(solution, weights)
    if cost_function == "bvc":
        return bvc(solution, weights)
    raise ValueError(f"unknown cost function {cost_function!r}")


def min_wpc_shortest_path(graph: DirectedGraph, task: Task,
                          weights: Optional[TaskWeights] = None) -> Optional[Path]:
    """Minimum-cost path for the task that, among all minimum-cost paths,
    contributes the least to the prediction cost (fewest weighted
    out-degrees). The task weight scales all candidates equally, so only
    the out-degree sum matters."""
    return min_branch_shortest_path(graph, task.src, task.dst)


def branching_vertices_on_paths(union: DirectedGraph, paths) -> set:
    on_paths = set()
    for path in paths:
        on_paths.update(path)
    return {v for v in on_paths if union.out_degree(v) > 1}


def report(solution: Solution, instance) -> PredictabilityReport:
    """Final measures, recomputed on the minimized graph with
    prediction-cost-minimal shortest paths per task."""
    nav = solution.union_graph()
    weights = instance.weights
    final_paths = {}
    for task in sorted(instance.tasks):
        p = min_wpc_shortest_path(nav, task, weights)
        if p is None:
            raise GraphError(f"task {task} disconnected in minimized graph")
        final_paths[task] = p
    final = Solution(chosen=final_paths, host=nav)
    f1, f2, wtot = _wpc_factors(final, weights, union=nav)
    wpc_val = f1 * f2
    gsc_val = gsc(final, weights)
    nv = math.inf if f1 == 0.0 else wtot / f1
    subopts = []
    for task in sorted(instance.tasks):
        cost = path_cost(nav, final_paths[task])
        opt = instance.optimal_cost(task)
        subopts.append(cost / opt)
    return PredictabilityReport(
        wpc=wpc_val,
        nv_nbv=nv,
        gsc=gsc_val,
        bvc=wpc_val * gsc_val,
        branching_vertex_count=len(
            branching_vertices_on_paths(nav, final_paths.values())),
        num_vertices=nav.num_vertices,
        num_edges=nav.num_edges,
        avg_suboptimality=sum(subopts) / len(subopts),
    )
