"""Structural detectors: unicyclic pendant profiles, the graph classes of the
src = m - 2 and src = m - 2t characterizations, triangle packings, the
two-smallest-cycle intersection pattern, and line graphs."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Literal

from .errors import GirthOutOfRange, InvalidPacking, NotCubic, NotGBar, NotUnicyclic
from .graph import (
    Cycle,
    Graph,
    blocks,
    from_edge_list,
    girth,
    is_connected,
    require_connected,
    smallest_cycle,
    smallest_two_cycles,
)

PathRule = Literal["endpoint", "any"]


# ---------------------------------------------------------------------------
# unicyclic graphs


@dataclass(frozen=True)
class PendantProfile:
    """The cycle ``v_1..v_k`` of a unicyclic graph and the tree hanging at each ``v_i``."""

    cycle: tuple[int, ...]
    tree_edges: tuple[frozenset[int], ...]
    tree_vertices: tuple[frozenset[int], ...]
    nontrivial: tuple[bool, ...]
    endpoint_path: tuple[bool, ...]
    any_path: tuple[bool, ...]

    @property
    def k(self) -> int:
        return len(self.cycle)

    @property
    def nontrivial_count(self) -> int:
        return sum(self.nontrivial)


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n


def pendant_profile(g: Graph) -> PendantProfile:
    if not is_unicyclic(g):
        raise NotUnicyclic(f"{g!r} is not unicyclic")
    cycle = smallest_cycle(g)
    assert cycle is not None
    on_cycle = set(cycle.edges)
    tree_edges, tree_vertices, nontrivial, endpoint_path, any_path = [], [], [], [], []
    for root in cycle.vertices:
        verts, edges = {root}, set()
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                e = g.edge_id(u, w)
                if e in on_cycle or e in edges:
                    continue
                edges.add(e)
                if w not in verts:
                    verts.add(w)
                    stack.append(w)
        deg = {v: 0 for v in verts}
        for e in edges:
            a, b = g.edges[e]
            deg[a] += 1
            deg[b] += 1
        is_path = all(d <= 2 for d in deg.values())
        tree_edges.append(frozenset(edges))
        tree_vertices.append(frozenset(verts))
        nontrivial.append(bool(edges))
        any_path.append(bool(edges) and is_path)
        endpoint_path.append(bool(edges) and is_path and deg[root] == 1)
    return PendantProfile(
        cycle.vertices,
        tuple(tree_edges),
        tuple(tree_vertices),
        tuple(nontrivial),
        tuple(endpoint_path),
        tuple(any_path),
    )


# ---------------------------------------------------------------------------
# triangles and packings


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]
    edges: tuple[int, int, int]


@dataclass(frozen=True)
class TrianglePacking:
    triangles: tuple[Triangle, ...]
    certified: bool = True

    @property
    def t(self) -> int:
        return len(self.triangles)

    def edge_set(self) -> set[int]:
        return {e for tri in self.triangles for e in tri.edges}


def triangles(g: Graph) -> list[Triangle]:
    out = []
    for a, b, c in itertools.combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            edges = tuple(sorted((g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c))))
            out.append(Triangle((a, b, c), edges))
    out.sort(key=lambda t: t.edges)
    return out


def make_packing(g: Graph, vertex_triples) -> TrianglePacking:
    """Packing from vertex triples; raises InvalidPacking if not edge-disjoint triangles of ``g``."""
    tris = []
    used: set[int] = set()
    for triple in vertex_triples:
        a, b, c = sorted(triple)
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            raise InvalidPacking(f"{(a, b, c)} is not a triangle")
        edges = tuple(sorted((g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c))))
        if used & set(edges):
            raise InvalidPacking(f"triangle {(a, b, c)} shares an edge with another")
        used.update(edges)
        tris.append(Triangle((a, b, c), edges))
    return TrianglePacking(tuple(tris))


def validate_packing(g: Graph, p: TrianglePacking) -> None:
    make_packing(g, [tri.vertices for tri in p.triangles])


def max_edge_disjoint_triangles(g: Graph, exact: bool = True) -> TrianglePacking:
    """Maximum edge-disjoint triangle packing (exact) or lexicographic greedy."""
    tris = triangles(g)
    if not exact:
        used: set[int] = set()
        chosen = []
        for tri in tris:
            if not used & set(tri.edges):
                used.update(tri.edges)
                chosen.append(tri)
        return TrianglePacking(tuple(chosen), certified=False)

    best: list[Triangle] = []

    def search(i: int, used: frozenset[int], chosen: list[Triangle]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if i == len(tris):
            return
        bound = len(chosen) + min(len(tris) - i, (g.m - len(used)) // 3)
        if bound <= len(best):
            return
        tri = tris[i]
        if not used & set(tri.edges):
            chosen.append(tri)
            search(i + 1, used | set(tri.edges), chosen)
            chosen.pop()
        search(i + 1, used, chosen)

    search(0, frozenset(), [])
    return TrianglePacking(tuple(best))


def maximal_packings(g: Graph, limit: int | None = None):
    """Inclusion-maximal triangle packings, in lexicographic order."""
    tris = triangles(g)
    count = 0

    def search(i: int, used: frozenset[int], chosen: list[Triangle]):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if i == len(tris):
            if all(used & set(t.edges) for t in tris if t not in chosen):
                count += 1
                yield TrianglePacking(tuple(chosen))
            return
        tri = tris[i]
        if not used & set(tri.edges):
            chosen.append(tri)
            yield from search(i + 1, used | set(tri.edges), chosen)
            chosen.pop()
        yield from search(i + 1, used, chosen)

    yield from search(0, frozenset(), [])


# ---------------------------------------------------------------------------
# classes


def gbar_triangles(g: Graph) -> list[tuple[int, int, int]] | None:
    """Vertex triples of the triangles if every block is a bridge or a triangle
    and every triangle has a degree-two vertex; otherwise ``None``."""
    found = []
    for block in blocks(g).blocks:
        if len(block) == 1:
            continue
        if len(block) != 3:
            return None
        verts = sorted({v for e in block for v in g.edges[e]})
        if len(verts) != 3:  # pragma: no cover - a 3-edge block is a triangle
            return None
        if not any(g.degree(v) == 2 for v in verts):
            return None
        found.append(tuple(verts))
    return found


def classify(g: Graph, path_rule: PathRule = "endpoint") -> frozenset[str]:
    """Every applicable label among Tree, C5, G1, G2, G3, GBar(t), Other.

    ``path_rule`` says when a pendant tree counts as "a path": ``"endpoint"``
    requires the attachment vertex to be an end of the path; ``"any"`` accepts
    any path.
    """
    require_connected(g)
    labels: set[str] = set()
    if g.m == g.n - 1:
        labels.add("Tree")
    if is_unicyclic(g):
        prof = pendant_profile(g)
        paths = prof.endpoint_path if path_rule == "endpoint" else prof.any_path
        nt = [i for i, flag in enumerate(prof.nontrivial) if flag]
        if prof.k == 5 and not nt:
            labels.add("C5")
        if prof.k == 3 and len(nt) <= 2:
            labels.add("G1")
        if prof.k == 4:
            if len(nt) == 2 and (nt[1] - nt[0]) == 2 and all(paths[i] for i in nt):
                labels.add("G2")
            if len(nt) <= 1 and all(paths[i] for i in nt):
                labels.add("G3")
    tris = gbar_triangles(g)
    if tris is not None:
        labels.add(f"GBar({len(tris)})")
    if not labels:
        labels.add("Other")
    return frozenset(labels)


def gbar_t(labels) -> int | None:
    for label in labels:
        if label.startswith("GBar("):
            return int(label[5:-1])
    return None


def d2_tree(g: Graph) -> Graph:
    """Delete the least degree-2 vertex of every triangle; vertices renumbered in order."""
    tris = gbar_triangles(g) if is_connected(g) else None
    if tris is None:
        raise NotGBar(f"{g!r} is not in any GBar class")
    doomed = {min(v for v in tri if g.degree(v) == 2) for tri in tris}
    keep = [v for v in range(g.n) if v not in doomed]
    new_id = {v: i for i, v in enumerate(keep)}
    pairs = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    return from_edge_list(len(keep), pairs)


# ---------------------------------------------------------------------------
# intersection of the two smallest cycles


class Pattern(str, enum.Enum):
    ONE_COMMON_EDGE = "OneCommonEdge"
    TWO_COMMON_ADJACENT_EDGES = "TwoCommonAdjacentEdges"
    EDGE_DISJOINT_4_CYCLES = "EdgeDisjoint4Cycles"
    FEWER_THAN_TWO_COMMON_VERTICES = "FewerThanTwoCommonVertices"
    NO_SECOND_CYCLE = "NoSecondCycle"
    UNLISTED = "Unlisted"


ALLOWED_PATTERNS = {
    3: {Pattern.ONE_COMMON_EDGE},
    4: {Pattern.ONE_COMMON_EDGE, Pattern.TWO_COMMON_ADJACENT_EDGES, Pattern.EDGE_DISJOINT_4_CYCLES},
    5: {Pattern.ONE_COMMON_EDGE, Pattern.TWO_COMMON_ADJACENT_EDGES},
}


@dataclass(frozen=True)
class Lemma1Config:
    girth: int
    pattern: Pattern
    cycles: tuple[Cycle, Cycle] | None = None

    @property
    def shared_vertices(self) -> int:
        if self.cycles is None:
            return 0
        c1, c2 = self.cycles
        return len(set(c1.vertices) & set(c2.vertices))

    @property
    def allowed(self) -> bool:
        """Whether the pattern is one the lemma permits (vacuous below two shared vertices)."""
        if self.pattern in (Pattern.NO_SECOND_CYCLE, Pattern.FEWER_THAN_TWO_COMMON_VERTICES):
            return True
        return self.pattern in ALLOWED_PATTERNS[self.girth]


def _antipodal(cycle: Cycle, a: int, b: int) -> bool:
    i, j = cycle.vertices.index(a), cycle.vertices.index(b)
    return abs(i - j) == 2


def intersection_pattern(g: Graph, c1: Cycle, c2: Cycle) -> Pattern:
    shared_v = set(c1.vertices) & set(c2.vertices)
    shared_e = set(c1.edges) & set(c2.edges)
    if len(shared_v) < 2:
        return Pattern.FEWER_THAN_TWO_COMMON_VERTICES
    if len(shared_e) == 1 and len(shared_v) == 2:
        return Pattern.ONE_COMMON_EDGE
    if len(shared_e) == 2 and len(shared_v) == 3:
        e, f = (g.edges[i] for i in shared_e)
        if set(e) & set(f):
            return Pattern.TWO_COMMON_ADJACENT_EDGES
    if (
        not shared_e
        and len(c1) == 4
        and len(c2) == 4
        and len(shared_v) == 2
        and _antipodal(c1, *shared_v)
        and _antipodal(c2, *shared_v)
    ):
        return Pattern.EDGE_DISJOINT_4_CYCLES
    return Pattern.UNLISTED


def lemma1_configuration(g: Graph) -> Lemma1Config:
    require_connected(g)
    gg = girth(g)
    if gg is None or not 3 <= gg <= 5:
        raise GirthOutOfRange(f"girth {gg} outside 3..5")
    pair = smallest_two_cycles(g)
    if pair is None:
        return Lemma1Config(gg, Pattern.NO_SECOND_CYCLE)
    return Lemma1Config(gg, intersection_pattern(g, *pair), pair)


# ---------------------------------------------------------------------------
# line graphs


def line_graph(g: Graph) -> Graph:
    """L(G): vertex ``i`` is edge ``i`` of ``g``; edges listed in ascending (i, j)."""
    pairs = []
    for i, j in itertools.combinations(range(g.m), 2):
        if set(g.edges[i]) & set(g.edges[j]):
            pairs.append((i, j))
    return from_edge_list(g.m, pairs)


def star_cliques(g: Graph) -> list[frozenset[int]]:
    """The clique of L(G) spanned by the star at each vertex of degree >= 2.

    These form a clique decomposition of L(G); checked before returning.
    """
    cliques = [frozenset(g.incident(v)) for v in range(g.n) if g.degree(v) >= 2]
    covered: dict[tuple[int, int], int] = {}
    for clique in cliques:
        for i, j in itertools.combinations(sorted(clique), 2):
            covered[(i, j)] = covered.get((i, j), 0) + 1
    lg = line_graph(g)
    assert sorted(covered) == sorted(lg.edges) and all(c == 1 for c in covered.values())
    return cliques


def star_packing(g: Graph) -> TrianglePacking:
    """The star triangles of a cubic graph as an edge-disjoint packing of L(G)."""
    if not is_cubic(g):
        raise NotCubic(f"{g!r} is not cubic")
    lg = line_graph(g)
    return make_packing(lg, [tuple(sorted(c)) for c in star_cliques(g) if len(c) == 3])


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(d == 3 for d in g.degrees)
