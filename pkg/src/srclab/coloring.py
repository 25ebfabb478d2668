"""Edge colorings and the rainbow-path / rainbow-geodesic verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ColoringMismatch, NotAPath
from .graph import Graph, ShortestPathDag, bridges, require_connected, shortest_path_dag


@dataclass(frozen=True)
class EdgeColoring:
    """One color label per edge id. Labels are opaque integers."""

    graph: Graph = field(repr=False)
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.m:
            raise ColoringMismatch(f"{len(self.colors)} colors for {self.graph.m} edges")

    @classmethod
    def of(cls, graph: Graph, colors: Sequence[int]) -> "EdgeColoring":
        return cls(graph, tuple(int(c) for c in colors))

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, edge_id: int) -> int:
        return self.colors[edge_id]

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_id(u, v)]

    def colors_of(self, edge_ids) -> set[int]:
        return {self.colors[e] for e in edge_ids}

    def normalized(self) -> "EdgeColoring":
        """Relabel colors to 0.. in order of first use."""
        mapping: dict[int, int] = {}
        return EdgeColoring(self.graph, tuple(mapping.setdefault(c, len(mapping)) for c in self.colors))

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.colors)

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> "EdgeColoring":
        return cls.of(graph, [int(tok) for tok in text.split()])


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: tuple[int, int] | None = None

    def __post_init__(self):
        if self.ok != (self.witness is None):
            raise ValueError("witness must be present exactly when the verdict fails")

    def __bool__(self) -> bool:
        return self.ok


def is_rainbow_path(c: EdgeColoring, path: Sequence[int]) -> bool:
    g = c.graph
    seen = set()
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise NotAPath(f"{a}-{b} is not an edge")
        color = c.color_of(a, b)
        if color in seen:
            return False
        seen.add(color)
    return True


def _rainbow_descent(g: Graph, c: EdgeColoring, dag: ShortestPathDag, v: int) -> bool:
    # walk parents from v back to the DAG source, never repeating a color
    stack = [(v, frozenset())]
    while stack:
        w, used = stack.pop()
        if w == dag.source:
            return True
        for p in dag.parents[w]:
            color = c.colors[g.edge_id(p, w)]
            if color not in used:
                stack.append((p, used | {color}))
    return False


def has_rainbow_geodesic(g: Graph, c: EdgeColoring, u: int, v: int) -> bool:
    require_connected(g)
    return _rainbow_descent(g, c, shortest_path_dag(g, u), v)


def is_strongly_rainbow_connected(g: Graph, c: EdgeColoring) -> Verdict:
    require_connected(g)
    for u in range(g.n):
        dag = shortest_path_dag(g, u)
        for v in range(u + 1, g.n):
            if dag.dist[v] > 1 and not _rainbow_descent(g, c, dag, v):
                return Verdict(False, (u, v))
    return Verdict(True)


def _has_rainbow_path(g: Graph, c: EdgeColoring, u: int, v: int, cap: int) -> bool:
    stack = [(u, frozenset([u]), frozenset())]
    while stack:
        w, visited, used = stack.pop()
        if w == v:
            return True
        if len(used) >= cap:
            continue
        for x in g.adj[w]:
            if x in visited:
                continue
            color = c.colors[g.edge_id(w, x)]
            if color not in used:
                stack.append((x, visited | {x}, used | {color}))
    return False


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> Verdict:
    require_connected(g)
    cap = c.color_count
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not _has_rainbow_path(g, c, u, v, cap):
                return Verdict(False, (u, v))
    return Verdict(True)


def cut_edge_colors_distinct(g: Graph, c: EdgeColoring) -> bool:
    cut = [c.colors[e] for e in sorted(bridges(g))]
    return len(cut) == len(set(cut))
