"""Hill climbing with random restarts over path combinations, plus the
post-convergence redundant-path drop and a brute-force oracle."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import IndexedPool
from .candidates import CUTOFF_TOL, CandidatePool, build_candidates
from .graph import DirectedGraph, path_cost, shortest_path, union_subgraph
from .measures import (
    PredictabilityReport,
    Solution,
    Task,
    min_wpc_shortest_path,
    report,
    solution_cost,
)

COST_FUNCTIONS = ("gsc", "bvc")


@dataclass
class SearchConfig:
    cost_function: str = "bvc"
    restart_count: int = 5
    population_cap: int = 20
    master_seed: int = 0

    def __post_init__(self):
        if self.cost_function not in COST_FUNCTIONS:
            raise ValueError(f"unknown cost function {self.cost_function!r}")
        if self.restart_count < 1:
            raise ValueError("restart_count must be >= 1")


@dataclass
class SearchTrace:
    """Accepted (iteration, cost) pairs per restart; index 0 is the cost
    of the initial random combination."""

    restarts: list = field(default_factory=list)

    @property
    def best_cost_per_restart(self):
        return [r[-1][1] for r in self.restarts]

    def to_json(self):
        return {
            "restarts": [[[i, c] for i, c in r] for r in self.restarts],
            "best_cost_per_restart": self.best_cost_per_restart,
        }


def _restart_rng(master_seed: int, restart: int) -> np.random.Generator:
    # Independent stream per restart: sequential and parallel execution
    # produce identical results.
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence([master_seed, restart])))


def hc_search(instance, pool: CandidatePool,
              config: SearchConfig) -> tuple[Solution, SearchTrace]:
    """Greedy path-replacement sweeps from random starting combinations;
    best result across restarts, lowest restart index on cost ties."""
    for task in instance.tasks:
        if not pool.paths.get(task):
            raise ValueError(f"empty candidate pool for task {task}")
    idx = IndexedPool(instance.graph, pool, instance.weights)
    cf = config.cost_function
    n_tasks = len(idx.tasks)

    best_cost = math.inf
    best_chosen = None
    trace = SearchTrace()
    for r in range(config.restart_count):
        rng = _restart_rng(config.master_seed, r)
        chosen = np.array(
            [rng.integers(size) for size in idx.pool_sizes], dtype=np.int64)
        cost = idx.cost(chosen, cf)
        restart_trace = [(0, cost)]
        iteration = 0
        while True:
            prev_cost = cost
            for t in range(n_tasks):
                cur = int(chosen[t])
                min_cost = cost
                best_i = cur
                best_path_cost = idx.path_costs[t][cur]
                for a in range(idx.pool_sizes[t]):
                    chosen[t] = a
                    c = idx.cost(chosen, cf)
                    pc = idx.path_costs[t][a]
                    # strict improvement, or same graph cost with a
                    # strictly shorter individual path
                    if c < min_cost or (c == min_cost and pc < best_path_cost):
                        min_cost = c
                        best_i = a
                        best_path_cost = pc
                chosen[t] = best_i
                if min_cost < cost:
                    cost = min_cost
                    iteration += 1
                    restart_trace.append((iteration, cost))
            if cost == prev_cost:
                break
        trace.restarts.append(restart_trace)
        if cost < best_cost:
            best_cost = cost
            best_chosen = chosen.copy()

    solution = Solution(
        chosen={idx.tasks[t]: idx.paths[t][int(best_chosen[t])]
                for t in range(n_tasks)},
        host=instance.graph,
    )
    return solution, trace


def replace_path(task: Task, instance, chosen: Solution, pool: CandidatePool,
                 cost_function: str) -> tuple[float, Solution]:
    """Best single-path replacement for one task: lowest total cost, then
    shortest individual path on total-cost ties."""
    weights = instance.weights
    best_path = chosen.chosen[task]
    min_cost = solution_cost(chosen, weights, cost_function)
    best_path_cost = path_cost(instance.graph, best_path)
    for alt in pool.paths[task]:
        cand = Solution(chosen={**chosen.chosen, task: alt},
                        host=instance.graph)
        c = solution_cost(cand, weights, cost_function)
        pc = path_cost(instance.graph, alt)
        if c < min_cost or (c == min_cost and pc < best_path_cost):
            min_cost = c
            best_path_cost = pc
            best_path = alt
    return min_cost, Solution(chosen={**chosen.chosen, task: best_path},
                              host=instance.graph)


def drop_redundant_paths(instance, chosen: Solution,
                         cost_function: str = "bvc") -> Solution:
    """Single pass in task order: if the other tasks' paths already carry
    this task within its cutoff, reroute it onto them. A reroute is kept
    only when it does not increase the chosen cost function."""
    weights = instance.weights
    sol = dict(chosen.chosen)
    base_cost = solution_cost(Solution(sol, instance.graph), weights,
                              cost_function)
    for task in sorted(sol):
        others = [sol[t] for t in sorted(sol) if t != task]
        if not others:
            continue
        induced = union_subgraph(instance.graph, others)
        if task.src not in induced or task.dst not in induced:
            continue
        sp = shortest_path(induced, task.src, task.dst)
        if sp is None:
            continue
        if path_cost(induced, sp) - instance.cutoffs[task] > CUTOFF_TOL:
            continue
        reroute = min_wpc_shortest_path(induced, task, weights)
        cand = dict(sol)
        cand[task] = reroute
        cand_cost = solution_cost(Solution(cand, instance.graph), weights,
                                  cost_function)
        if cand_cost <= base_cost:
            sol = cand
            base_cost = cand_cost
    return Solution(chosen=sol, host=instance.graph)


def minimize(instance, config: SearchConfig
             ) -> tuple[DirectedGraph, PredictabilityReport, SearchTrace]:
    """Full pipeline: candidate pools, hill climbing, redundant-path drop,
    navigation graph and final report."""
    pool = build_candidates(instance.graph, instance.tasks, instance.cutoffs,
                            config.population_cap)
    solution, trace = hc_search(instance, pool, config)
    solution = drop_redundant_paths(instance, solution, config.cost_function)
    nav = solution.union_graph()
    return nav, report(solution, instance), trace


class SearchSpaceTooLarge(ValueError):
    pass


def brute_force_min(instance, pool: CandidatePool, cost_function: str,
                    bound: int = 10 ** 6) -> Solution:
    """Exhaustive pool-combination optimum. Independent of the kernel and
    hill-climbing code paths; ties go to the lexicographically first
    combination (task order, then pool index)."""
    tasks = sorted(pool.paths)
    total = math.prod(len(pool.paths[t]) for t in tasks)
    if total > bound:
        raise SearchSpaceTooLarge(
            f"{total} combinations exceed the bound of {bound}")
    weights = instance.weights
    best = None
    best_cost = math.inf
    for combo in itertools.product(*(pool.paths[t] for t in tasks)):
        sol = Solution(chosen=dict(zip(tasks, combo)), host=instance.graph)
        c = solution_cost(sol, weights, cost_function)
        if c < best_cost:
            best_cost = c
            best = sol
    return best
