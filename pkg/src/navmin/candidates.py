"""Per-task candidate path pools via iterated shortest paths with
edge-weight doubling on a working copy of the graph."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DirectedGraph, path_cost, shortest_path
from .measures import Task


# Absolute slack on cutoff comparisons; keeps multiplier-1 cutoffs (cost
# exactly equal to the optimum) from tripping on float summation order.
CUTOFF_TOL = 1e-9


class InfeasibleTaskError(ValueError):
    def __init__(self, task: Task, message: str = ""):
        self.task = task
        super().__init__(message or f"task {task} has no feasible path")


@dataclass
class CandidatePool:
    paths: dict  # Task -> list of Path, each within the task's cutoff
    population_cap: int

    def __getitem__(self, task: Task):
        return self.paths[task]


def build_candidates(graph: DirectedGraph, tasks, cutoffs: dict,
                     population_cap: int) -> CandidatePool:
    """For each task, repeatedly take the shortest path on a working copy,
    keep it if its cost under the original weights is within the cutoff,
    then double the kept path's edge weights on the copy to coax out
    alternatives. Stops early once the copy's shortest path goes over the
    cutoff or repeats a pool member (further doubling cannot help).
    """
    if population_cap < 1:
        raise ValueError("population_cap must be >= 1")
    pools = {}
    for task in sorted(tasks):
        work = graph.copy()
        pool = []
        while len(pool) < population_cap:
            sp = shortest_path(work, task.src, task.dst)
            if sp is None:
                break
            true_cost = path_cost(graph, sp)
            if true_cost - cutoffs[task] > CUTOFF_TOL or sp in pool:
                break
            pool.append(sp)
            for u, v in zip(sp, sp[1:]):
                work.set_edge_weight(u, v, work.edge_weight(u, v) * 2.0)
        if not pool:
            raise InfeasibleTaskError(task)
        pools[task] = pool
    return CandidatePool(paths=pools, population_cap=population_cap)
