"""Pure-Python evaluation kernel for the hill-climbing inner loop.

Mirrors the compiled kernel in _speedups.pyx operation for operation so
both produce bit-identical floats. Paths are pre-indexed: vertices and
edges are small integers, each pool path a flat slice.
"""

from __future__ import annotations


class EvalContext:
    """Evaluates the cost measures of one path-per-task combination."""

    kind = "python"

    def __init__(self, weights, pool_offsets, vert_off, vert_data,
                 edge_off, edge_data, edge_src, n_vertices, n_edges):
        self.weights = list(weights)
        self.pool_offsets = list(pool_offsets)
        self.vert_off = list(vert_off)
        self.vert_data = list(vert_data)
        self.edge_off = list(edge_off)
        self.edge_data = list(edge_data)
        self.edge_src = list(edge_src)
        self.n_tasks = len(self.weights)
        self._vstamp = [0] * n_vertices
        self._vmax = [0.0] * n_vertices
        self._outdeg = [0] * n_vertices
        self._estamp = [0] * n_edges
        self._emax = [0.0] * n_edges
        self._stamp = 0

    def evaluate(self, chosen):
        """Returns (f1, f2, gsc, wtot): weighted branching-vertex mass,
        weighted out-degree mass, graph-size cost, total vertex mass."""
        self._stamp += 1
        stamp = self._stamp
        vstamp, vmax, outdeg = self._vstamp, self._vmax, self._outdeg
        estamp, emax = self._estamp, self._emax
        weights = self.weights
        pool_offsets = self.pool_offsets
        vert_off, vert_data = self.vert_off, self.vert_data
        edge_off, edge_data = self.edge_off, self.edge_data
        edge_src = self.edge_src

        gsc = 0.0
        # pass 1: union membership, out-degrees, per-element max weights
        for t in range(self.n_tasks):
            w = weights[t]
            slot = pool_offsets[t] + chosen[t]
            for i in range(edge_off[slot], edge_off[slot + 1]):
                e = edge_data[i]
                if estamp[e] != stamp:
                    estamp[e] = stamp
                    emax[e] = w
                    gsc += w
                    s = edge_src[e]
                    if vstamp[s] != stamp:
                        vstamp[s] = stamp
                        vmax[s] = 0.0
                        outdeg[s] = 0
                    outdeg[s] += 1
                elif w > emax[e]:
                    gsc += w - emax[e]
                    emax[e] = w
            for i in range(vert_off[slot], vert_off[slot + 1]):
                v = vert_data[i]
                if vstamp[v] != stamp:
                    vstamp[v] = stamp
                    vmax[v] = w
                    gsc += w
                    outdeg[v] = 0
                elif w > vmax[v]:
                    gsc += w - vmax[v]
                    vmax[v] = w
        # pass 2: prediction-cost factors over task-path vertices
        f1 = 0.0
        f2 = 0.0
        wtot = 0.0
        for t in range(self.n_tasks):
            w = weights[t]
            slot = pool_offsets[t] + chosen[t]
            for i in range(vert_off[slot], vert_off[slot + 1]):
                d = outdeg[vert_data[i]]
                f2 += w * d
                if d > 1:
                    f1 += w
                wtot += w
        return f1, f2, gsc, wtot
