"""Directed weighted graphs, grid construction, and shortest paths.

Vertices are arbitrary hashable, orderable identifiers; grid graphs use
(row, col) tuples. All shortest-path queries are deterministic: ties are
broken towards the lexicographically smallest vertex sequence.
"""

from __future__ import annotations

import math
from heapq import heappop, heappush
from typing import Hashable, Iterable, Optional

VertexId = Hashable
Path = tuple  # ordered vertex sequence, length >= 2


class GraphError(ValueError):
    pass


class DirectedGraph:
    """Weighted directed graph with positive edge weights and no self-loops."""

    __slots__ = ("_adj", "_radj")

    def __init__(self):
        self._adj: dict = {}   # u -> {v: weight}
        self._radj: dict = {}  # v -> {u: weight}

    # -- construction ----------------------------------------------------

    def add_vertex(self, v: VertexId) -> None:
        if v not in self._adj:
            self._adj[v] = {}
            self._radj[v] = {}

    def add_edge(self, u: VertexId, v: VertexId, weight: float = 1.0) -> None:
        if u == v:
            raise GraphError(f"self-loop edge on {u!r}")
        if weight <= 0:
            raise GraphError(f"non-positive edge weight {weight} on ({u!r}, {v!r})")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u][v] = weight
        self._radj[v][u] = weight

    def remove_edge(self, u: VertexId, v: VertexId) -> None:
        try:
            del self._adj[u][v]
            del self._radj[v][u]
        except KeyError:
            raise GraphError(f"no edge ({u!r}, {v!r})") from None

    def remove_vertex(self, v: VertexId) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")
        for u in list(self._radj[v]):
            del self._adj[u][v]
        for w in list(self._adj[v]):
            del self._radj[w][v]
        del self._adj[v]
        del self._radj[v]

    def copy(self) -> "DirectedGraph":
        g = DirectedGraph()
        for v in self._adj:
            g.add_vertex(v)
        for u, nbrs in self._adj.items():
            for v, w in nbrs.items():
                g._adj[u][v] = w
                g._radj[v][u] = w
        return g

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self):
        return self._adj.keys()

    def __contains__(self, v: VertexId) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values())

    def edges(self) -> Iterable[tuple]:
        for u, nbrs in self._adj.items():
            for v, w in nbrs.items():
                yield u, v, w

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return u in self._adj and v in self._adj[u]

    def edge_weight(self, u: VertexId, v: VertexId) -> float:
        try:
            return self._adj[u][v]
        except KeyError:
            raise GraphError(f"no edge ({u!r}, {v!r})") from None

    def set_edge_weight(self, u: VertexId, v: VertexId, weight: float) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u!r}, {v!r})")
        self._adj[u][v] = weight
        self._radj[v][u] = weight

    def successors(self, v: VertexId):
        try:
            return self._adj[v].keys()
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def predecessors(self, v: VertexId):
        try:
            return self._radj[v].keys()
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def out_degree(self, v: VertexId) -> int:
        try:
            return len(self._adj[v])
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def in_degree(self, v: VertexId) -> int:
        try:
            return len(self._radj[v])
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self._adj == other._adj

    def is_subgraph_of(self, other: "DirectedGraph") -> bool:
        return all(v in other for v in self._adj) and all(
            other.has_edge(u, v) and other.edge_weight(u, v) == w
            for u, v, w in self.edges()
        )


def make_grid_graph(width: int, height: int) -> DirectedGraph:
    """Grid of (row, col) vertices, 4-neighbors linked both ways, weight 1."""
    if width < 1 or height < 1:
        raise GraphError(f"grid dimensions must be >= 1, got {width}x{height}")
    g = DirectedGraph()
    for r in range(height):
        for c in range(width):
            g.add_vertex((r, c))
    for r in range(height):
        for c in range(width):
            if c + 1 < width:
                g.add_edge((r, c), (r, c + 1), 1.0)
                g.add_edge((r, c + 1), (r, c), 1.0)
            if r + 1 < height:
                g.add_edge((r, c), (r + 1, c), 1.0)
                g.add_edge((r + 1, c), (r, c), 1.0)
    return g


def _check_vertex(graph: DirectedGraph, v: VertexId) -> None:
    if v not in graph:
        raise GraphError(f"unknown vertex {v!r}")


def dijkstra(graph: DirectedGraph, src: VertexId, reverse: bool = False) -> dict:
    """Distance map from src (or to src when reverse). Unreachable omitted."""
    _check_vertex(graph, src)
    adj = graph._radj if reverse else graph._adj
    dist = {src: 0.0}
    done = set()
    heap = [(0.0, src)]
    while heap:
        d, u = heappop(heap)
        if u in done:
            continue
        done.add(u)
        for v, w in adj[u].items():
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, v))
    return dist


# Relative slack for "edge lies on a shortest path" checks; exact for the
# unit / power-of-two weights used throughout, tolerant for imported graphs.
_REL_EPS = 1e-9


def shortest_path(graph: DirectedGraph, src: VertexId,
                  dst: VertexId) -> Optional[Path]:
    """Minimum-weight path src -> dst, lexicographically smallest on ties.

    Returns None when dst is unreachable.
    """
    _check_vertex(graph, src)
    _check_vertex(graph, dst)
    if src == dst:
        return (src,)
    dist_f = dijkstra(graph, src)
    if dst not in dist_f:
        return None
    dist_b = dijkstra(graph, dst, reverse=True)
    opt = dist_f[dst]
    eps = _REL_EPS * max(1.0, opt)
    # Greedy walk: at each vertex take the smallest successor that still
    # lies on some minimum-weight path to dst.
    path = [src]
    cur = src
    while cur != dst:
        nxt = None
        for v in sorted(graph._adj[cur]):
            if v not in dist_b:
                continue
            w = graph._adj[cur][v]
            if abs(dist_f[cur] + w + dist_b[v] - opt) <= eps:
                nxt = v
                break
        assert nxt is not None
        path.append(nxt)
        cur = nxt
    return tuple(path)


def path_cost(graph: DirectedGraph, path: Path) -> float:
    """Sum of the path's edge weights in graph."""
    if len(path) < 2:
        raise GraphError("path must have at least 2 vertices")
    total = 0.0
    for u, v in zip(path, path[1:]):
        total += graph.edge_weight(u, v)
    return total


def validate_path(graph: DirectedGraph, path: Path) -> None:
    if len(path) < 2:
        raise GraphError("path must have at least 2 vertices")
    if len(set(path)) != len(path):
        raise GraphError("path is not simple")
    for u, v in zip(path, path[1:]):
        if not graph.has_edge(u, v):
            raise GraphError(f"missing edge ({u!r}, {v!r})")


def union_subgraph(graph: DirectedGraph, paths: Iterable[Path]) -> DirectedGraph:
    """Subgraph made of exactly the vertices and edges on the given paths."""
    sub = DirectedGraph()
    for path in paths:
        validate_path(graph, path)
        for v in path:
            sub.add_vertex(v)
        for u, v in zip(path, path[1:]):
            sub.add_edge(u, v, graph.edge_weight(u, v))
    return sub


def min_branch_shortest_path(graph: DirectedGraph, src: VertexId,
                             dst: VertexId) -> Optional[Path]:
    """Among minimum-weight src->dst paths, one minimizing the sum of
    vertex out-degrees along it; lexicographic vertex order on remaining ties.
    """
    _check_vertex(graph, src)
    _check_vertex(graph, dst)
    if src == dst:
        return (src,)

    def tuple_dijkstra(reverse: bool) -> dict:
        # label = (distance, sum of out-degrees of visited vertices incl. both ends)
        adj = graph._radj if reverse else graph._adj
        start = dst if reverse else src
        dist = {start: (0.0, graph.out_degree(start))}
        done = set()
        heap = [(0.0, graph.out_degree(start), start)]
        while heap:
            d, b, u = heappop(heap)
            if u in done:
                continue
            done.add(u)
            for v, w in adj[u].items():
                cand = (d + w, b + graph.out_degree(v))
                if v not in dist or cand < dist[v]:
                    dist[v] = cand
                    heappush(heap, (cand[0], cand[1], v))
        return dist

    fwd = tuple_dijkstra(reverse=False)
    if dst not in fwd:
        return None
    bwd = tuple_dijkstra(reverse=True)
    opt_d, opt_b = fwd[dst]
    eps = _REL_EPS * max(1.0, opt_d)
    path = [src]
    cur = src
    while cur != dst:
        nxt = None
        for v in sorted(graph._adj[cur]):
            if v not in bwd:
                continue
            w = graph._adj[cur][v]
            fd, fb = fwd[cur]
            bd, bb = bwd[v]
            if (abs(fd + w + bd - opt_d) <= eps
                    and fb + bb == opt_b):
                nxt = v
                break
        assert nxt is not None
        path.append(nxt)
        cur = nxt
    return tuple(path)


def all_simple_paths(graph: DirectedGraph, src: VertexId, dst: VertexId,
                     max_cost: float = math.inf):
    """Exhaustive simple-path enumeration. Test oracle; small graphs only."""
    _check_vertex(graph, src)
    _check_vertex(graph, dst)
    stack = [(src, (src,), 0.0)]
    while stack:
        u, path, cost = stack.pop()
        if u == dst and len(path) >= 2:
            yield path, cost
            continue
        for v in sorted(graph._adj[u], reverse=True):
            if v in path:
                continue
            c = cost + graph._adj[u][v]
            if c <= max_cost:
                stack.append((v, path + (v,), c))
