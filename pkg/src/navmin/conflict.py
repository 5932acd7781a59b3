"""Discrete-time rollout utilities: reachable-position envelopes on a
navigation graph, and earliest same-cell collision between scripted
agents moving in lockstep."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .graph import DirectedGraph, GraphError, VertexId
from .instances import graph_from_json


def reachable_positions(nav_graph: DirectedGraph, start: VertexId,
                        horizon: int) -> list:
    """Position sets per step, index 0 through horizon. A vertex with no
    outgoing edge persists (the robot halts there)."""
    if start not in nav_graph:
        raise GraphError(f"unknown start vertex {start!r}")
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    sets = [{start}]
    for _ in range(horizon):
        nxt = set()
        for v in sets[-1]:
            succ = nav_graph.successors(v)
            if succ:
                nxt.update(succ)
            else:
                nxt.add(v)
        sets.append(nxt)
    return sets


def _position(path, step: int):
    # agents past the end of their script stay at the final vertex
    return path[min(step, len(path) - 1)]


def earliest_collision(robot_paths: list, human_path) -> Optional[int]:
    """Smallest step at which the human and any robot occupy the same
    vertex (step 0 = starting positions); None if no collision occurs
    within the longest script."""
    if not robot_paths or not human_path:
        raise ValueError("paths must be nonempty")
    horizon = max(len(p) for p in list(robot_paths) + [human_path]) - 1
    for step in range(horizon + 1):
        hp = _position(human_path, step)
        for rp in robot_paths:
            if _position(rp, step) == hp:
                return step
    return None


@dataclass
class ConflictFixture:
    graph: DirectedGraph
    robots: list  # scripted vertex sequences on the navigation graph
    human: tuple  # scripted vertex sequence on the ambient grid

    def validate(self) -> None:
        for seq in self.robots:
            for u, v in zip(seq, seq[1:]):
                if not self.graph.has_edge(u, v):
                    raise GraphError(f"robot step ({u!r}, {v!r}) not an edge")
        for u, v in zip(self.human, self.human[1:]):
            if abs(u[0] - v[0]) + abs(u[1] - v[1]) != 1:
                raise GraphError(f"human step ({u!r}, {v!r}) not adjacent")

    def branching_vertices(self) -> set:
        return {v for v in self.graph.vertices
                if self.graph.out_degree(v) > 1}

    def overlap_positions(self) -> set:
        return set(self.human) & set(self.graph.vertices)

    @classmethod
    def from_json(cls, doc: dict) -> "ConflictFixture":
        fixture = cls(
            graph=graph_from_json(doc["graph"]),
            robots=[tuple(tuple(v) for v in seq) for seq in doc["robots"]],
            human=tuple(tuple(v) for v in doc["human"]),
        )
        fixture.validate()
        return fixture

    @classmethod
    def load(cls, path) -> "ConflictFixture":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def builtin_fixture(name: str) -> ConflictFixture:
    """Shipped human-study fixtures: 'problem1' or 'problem2'."""
    ref = resources.files("navmin").joinpath("fixtures", f"{name}.json")
    return ConflictFixture.from_json(json.loads(ref.read_text()))
