"""Kernel selection and path-pool indexing for the hill-climbing loop.

Imports the compiled kernel when available, otherwise the pure-Python
fallback. Set NAVMIN_FORCE_PY_KERNEL=1 to force the fallback (used by
the benchmark and the kernel-equivalence tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

try:
    from . import _speedups as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not os.environ.get("NAVMIN_FORCE_PY_KERNEL"):
    _default_impl = _compiled
else:
    _default_impl = _kernels_py

KERNEL_KIND = _default_impl.EvalContext.kind


class IndexedPool:
    """Integer-indexed view of a candidate pool for fast cost evaluation."""

    def __init__(self, graph, pool, weights, impl=None):
        impl = impl or _default_impl
        self.tasks = sorted(pool.paths)
        self.pool_sizes = [len(pool.paths[t]) for t in self.tasks]
        self.paths = [pool.paths[t] for t in self.tasks]
        self.path_costs = [
            [sum(graph.edge_weight(u, v) for u, v in zip(p, p[1:]))
             for p in pool.paths[t]]
            for t in self.tasks
        ]

        vid = {}
        eid = {}
        edge_src = []
        vert_off = [0]
        vert_data = []
        edge_off = [0]
        edge_data = []
        pool_offsets = [0]
        for t in self.tasks:
            for path in pool.paths[t]:
                for v in path:
                    if v not in vid:
                        vid[v] = len(vid)
                    vert_data.append(vid[v])
                vert_off.append(len(vert_data))
                for u, v in zip(path, path[1:]):
                    e = (u, v)
                    if e not in eid:
                        eid[e] = len(eid)
                        edge_src.append(vid[u])
                    edge_data.append(eid[e])
                edge_off.append(len(edge_data))
            pool_offsets.append(pool_offsets[-1] + len(pool.paths[t]))

        w = np.array([weights[t] for t in self.tasks], dtype=np.float64)
        self.ctx = impl.EvalContext(
            w,
            np.asarray(pool_offsets, dtype=np.int64),
            np.asarray(vert_off, dtype=np.int64),
            np.asarray(vert_data, dtype=np.int32),
            np.asarray(edge_off, dtype=np.int64),
            np.asarray(edge_data, dtype=np.int32),
            np.asarray(edge_src, dtype=np.int32),
            len(vid),
            len(eid),
        )

    def cost(self, chosen, cost_function: str) -> float:
        """Cost of one pool-index-per-task combination."""
        f1, f2, gsc, _ = self.ctx.evaluate(chosen)
        if cost_function == "gsc":
            return gsc
        if cost_function == "bvc":
            return (f1 * f2) * gsc
        raise ValueError(f"unknown cost function {cost_function!r}")

    def measures(self, chosen):
        return self.ctx.evaluate(chosen)
