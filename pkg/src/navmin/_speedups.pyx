# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernel for the hill-climbing inner loop.

Must stay arithmetic-identical to _kernels_py.EvalContext: the same
additions in the same order, so the two kernels are interchangeable.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef class EvalContext:
    kind = "compiled"

    cdef double[::1] weights
    cdef long[::1] pool_offsets
    cdef long[::1] vert_off
    cdef int[::1] vert_data
    cdef long[::1] edge_off
    cdef int[::1] edge_data
    cdef int[::1] edge_src
    cdef int n_tasks
    cdef long *_vstamp
    cdef double *_vmax
    cdef int *_outdeg
    cdef long *_estamp
    cdef double *_emax
    cdef long _stamp
    cdef int n_vertices
    cdef int n_edges

    def __cinit__(self, double[::1] weights, long[::1] pool_offsets,
                  long[::1] vert_off, int[::1] vert_data,
                  long[::1] edge_off, int[::1] edge_data,
                  int[::1] edge_src, int n_vertices, int n_edges):
        self.weights = weights
        self.pool_offsets = pool_offsets
        self.vert_off = vert_off
        self.vert_data = vert_data
        self.edge_off = edge_off
        self.edge_data = edge_data
        self.edge_src = edge_src
        self.n_tasks = weights.shape[0]
        self.n_vertices = n_vertices
        self.n_edges = n_edges
        self._stamp = 0
        self._vstamp = <long *>PyMem_Malloc(n_vertices * sizeof(long))
        self._vmax = <double *>PyMem_Malloc(n_vertices * sizeof(double))
        self._outdeg = <int *>PyMem_Malloc(n_vertices * sizeof(int))
        self._estamp = <long *>PyMem_Malloc(n_edges * sizeof(long))
        self._emax = <double *>PyMem_Malloc(n_edges * sizeof(double))
        if (self._vstamp == NULL or self._vmax == NULL or self._outdeg == NULL
                or self._estamp == NULL or self._emax == NULL):
            raise MemoryError()
        cdef int i
        for i in range(n_vertices):
            self._vstamp[i] = 0
        for i in range(n_edges):
            self._estamp[i] = 0

    def __dealloc__(self):
        PyMem_Free(self._vstamp)
        PyMem_Free(self._vmax)
        PyMem_Free(self._outdeg)
        PyMem_Free(self._estamp)
        PyMem_Free(self._emax)

    def evaluate(self, long[::1] chosen):
        """Returns (f1, f2, gsc, wtot); see the Python kernel for semantics."""
        self._stamp += 1
        cdef long stamp = self._stamp
        cdef double gsc = 0.0, f1 = 0.0, f2 = 0.0, wtot = 0.0
        cdef double w
        cdef long slot, i
        cdef int t, e, s, v, d

        for t in range(self.n_tasks):
            w = self.weights[t]
            slot = self.pool_offsets[t] + chosen[t]
            for i in range(self.edge_off[slot], self.edge_off[slot + 1]):
                e = self.edge_data[i]
                if self._estamp[e] != stamp:
                    self._estamp[e] = stamp
                    self._emax[e] = w
                    gsc += w
                    s = self.edge_src[e]
                    if self._vstamp[s] != stamp:
                        self._vstamp[s] = stamp
                        self._vmax[s] = 0.0
                        self._outdeg[s] = 0
                    self._outdeg[s] += 1
                elif w > self._emax[e]:
                    gsc += w - self._emax[e]
                    self._emax[e] = w
            for i in range(self.vert_off[slot], self.vert_off[slot + 1]):
                v = self.vert_data[i]
                if self._vstamp[v] != stamp:
                    self._vstamp[v] = stamp
                    self._vmax[v] = w
                    gsc += w
                    self._outdeg[v] = 0
                elif w > self._vmax[v]:
                    gsc += w - self._vmax[v]
                    self._vmax[v] = w

        for t in range(self.n_tasks):
            w = self.weights[t]
            slot = self.pool_offsets[t] + chosen[t]
            for i in range(self.vert_off[slot], self.vert_off[slot + 1]):
                d = self._outdeg[self.vert_data[i]]
                f2 += w * d
                if d > 1:
                    f1 += w
                wtot += w
        return f1, f2, gsc, wtot
