"""Independent brute-force evaluators used to cross-check the library.

Deliberately naive: plain double loops over tasks and path elements,
sharing no code with the package's measure implementations.
"""

import math


def union_elements(paths):
    verts = set()
    edges = set()
    for p in paths:
        verts.update(p)
        edges.update(zip(p, p[1:]))
    return verts, edges


def out_degree_map(paths):
    verts, edges = union_elements(paths)
    return {v: sum(1 for (a, _) in edges if a == v) for v in verts}


def brute_wpc(paths_by_task, weights):
    deg = out_degree_map(paths_by_task.values())
    f1 = sum(weights[t]
             for t in sorted(paths_by_task)
             for v in paths_by_task[t] if deg[v] > 1)
    f2 = sum(weights[t] * deg[v]
             for t in sorted(paths_by_task)
             for v in paths_by_task[t])
    return f1 * f2


def brute_nv_nbv(paths_by_task, weights):
    deg = out_degree_map(paths_by_task.values())
    num = sum(weights[t]
              for t in sorted(paths_by_task) for _ in paths_by_task[t])
    den = sum(weights[t]
              for t in sorted(paths_by_task)
              for v in paths_by_task[t] if deg[v] > 1)
    return math.inf if den == 0 else num / den


def brute_gsc(paths_by_task, weights):
    verts, edges = union_elements(paths_by_task.values())
    total = 0.0
    for e in edges:
        total += max(weights[t] for t in paths_by_task
                     if e in set(zip(paths_by_task[t], paths_by_task[t][1:])))
    for v in verts:
        total += max(weights[t] for t in paths_by_task
                     if v in paths_by_task[t])
    return total


def brute_bvc(paths_by_task, weights):
    return brute_wpc(paths_by_task, weights) * brute_gsc(paths_by_task, weights)
