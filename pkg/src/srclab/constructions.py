"""Constructive strong rainbow colorings.

Every scheme emits a plain :class:`EdgeColoring`. "Fresh" colors are the
smallest unused non-negative integers; a color taken "from a pendant tree"
is the color of that tree's least-id edge at its attachment vertex.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .coloring import EdgeColoring, is_strongly_rainbow_connected
from .errors import (
    Acyclic,
    ConstructionFailed,
    CycleTooLong,
    NotUnicyclic,
    SchemeNotApplicable,
)
from .graph import (
    Cycle,
    Graph,
    blocks,
    cycle_graph,
    cycle_pairs,
    iter_cycles,
    require_connected,
    smallest_cycle,
)
from .structure import (
    Pattern,
    PendantProfile,
    TrianglePacking,
    gbar_triangles,
    intersection_pattern,
    max_edge_disjoint_triangles,
    pendant_profile,
    triangles,
    validate_packing,
)


class _Painter:
    """Accumulates edge -> color assignments; unpainted edges get fresh colors."""

    def __init__(self, g: Graph):
        self.g = g
        self.colors: dict[int, int] = {}
        self.conflict: str | None = None
        self._next = 0

    def fresh(self) -> int:
        used = set(self.colors.values())
        while self._next in used:
            self._next += 1
        color = self._next
        self._next += 1
        return color

    def paint(self, edge: int, color: int) -> None:
        if edge in self.colors and self.colors[edge] != color:
            self.conflict = f"edge {self.g.edges[edge]} painted twice"
        self.colors[edge] = color

    def same(self, *pairs: tuple[int, int]) -> int:
        """Give the edges ``pairs`` (vertex pairs) one new shared color."""
        edges = [self.g.edge_id(u, v) for u, v in pairs]
        if len(set(edges)) != len(edges):
            self.conflict = "scheme identifies an edge with itself"
        color = self.fresh()
        for e in edges:
            self.paint(e, color)
        return color

    def finish(self) -> EdgeColoring:
        if self.conflict:
            raise SchemeNotApplicable(self.conflict)
        for e in range(self.g.m):
            if e not in self.colors:
                self.paint(e, self.fresh())
        return EdgeColoring.of(self.g, [self.colors[e] for e in range(self.g.m)])


def _verified(g: Graph, coloring: EdgeColoring, what: str) -> EdgeColoring:
    verdict = is_strongly_rainbow_connected(g, coloring)
    if not verdict:
        raise ConstructionFailed(f"{what}: no rainbow geodesic for pair {verdict.witness} under {coloring.colors}")
    return coloring


# ---------------------------------------------------------------------------
# cycles


def cycle_color_sequence(k: int) -> list[int]:
    """Colors of ``e_1..e_k`` around a k-cycle (labels start at 1)."""
    if k < 3:
        raise ValueError("a cycle needs at least three edges")
    if k % 2 == 0:
        half = k // 2
        return [i if i <= half else i - half for i in range(1, k + 1)]
    half = (k - 1) // 2
    return [i if i <= half + 1 else i - half - 1 for i in range(1, k + 1)]


def cycle_coloring(k: int) -> EdgeColoring:
    """The ceil(k/2)-color strong rainbow coloring of C_k (edge ``i`` joins ``i, i+1``)."""
    return EdgeColoring.of(cycle_graph(k), cycle_color_sequence(k))


def cycle_plus_fresh(g: Graph) -> EdgeColoring:
    """Cycle coloring on a smallest cycle, a fresh color on every other edge."""
    require_connected(g)
    c = smallest_cycle(g)
    if c is None:
        raise Acyclic(f"{g!r} has no cycle")
    painter = _Painter(g)
    k = len(c)
    for i, color in enumerate(cycle_color_sequence(k)):
        painter.paint(g.edge_id(c.vertices[i], c.vertices[(i + 1) % k]), color)
    return painter.finish()


# ---------------------------------------------------------------------------
# triangle packings


def triangle_packing_coloring(g: Graph, p: TrianglePacking) -> EdgeColoring:
    """One color per packed triangle, a fresh color on every other edge."""
    validate_packing(g, p)
    owner = {e: i for i, tri in enumerate(p.triangles) for e in tri.edges}
    tri_color: dict[int, int] = {}
    colors = []
    nxt = 0
    for e in range(g.m):
        if e in owner:
            if owner[e] not in tri_color:
                tri_color[owner[e]] = nxt
                nxt += 1
            colors.append(tri_color[owner[e]])
        else:
            colors.append(nxt)
            nxt += 1
    return EdgeColoring.of(g, colors)


# ---------------------------------------------------------------------------
# unicyclic graphs


@dataclass(frozen=True)
class UnicyclicScheme:
    tag: str
    case: str
    coloring: EdgeColoring
    claimed: int  # color count the case argument promises


def _orientations(cycle: Sequence[int]) -> Iterator[tuple[int, ...]]:
    k = len(cycle)
    for start in range(k):
        for step in (1, -1):
            yield tuple(cycle[(start + step * j) % k] for j in range(k))


def _tree_color(g: Graph, painter: _Painter, prof: PendantProfile, root: int) -> int:
    i = prof.cycle.index(root)
    e = min(x for x in g.incident(root) if x in prof.tree_edges[i])
    return painter.colors[e]


def _branching(g: Graph, prof: PendantProfile, root: int) -> tuple[int, int, int] | None:
    """Least vertex with two children in the tree rooted at ``root``, and its two least children."""
    i = prof.cycle.index(root)
    verts, edges = prof.tree_vertices[i], prof.tree_edges[i]
    parent = {root: None}
    order = [root]
    for u in order:
        for w in sorted(g.adj[u]):
            if w in verts and w not in parent and g.edge_id(u, w) in edges:
                parent[w] = u
                order.append(w)
    for u in sorted(verts):
        kids = sorted(w for w in verts if parent.get(w) == u)
        if len(kids) >= 2:
            return u, kids[0], kids[1]
    return None


def unicyclic_scheme(g: Graph, *, fallback: bool = True) -> UnicyclicScheme:
    prof = pendant_profile(g)
    k, m = prof.k, g.m
    nontriv = dict(zip(prof.cycle, prof.nontrivial))
    endpoint = dict(zip(prof.cycle, prof.endpoint_path))
    nt = prof.nontrivial_count

    def start() -> _Painter:
        p = _Painter(g)
        for edges in prof.tree_edges:
            for e in sorted(edges):
                p.paint(e, p.fresh())
        return p

    if k > 5:
        if not fallback:
            raise CycleTooLong(f"cycle length {k} > 5")
        coloring = cycle_plus_fresh(g)
        return UnicyclicScheme("CyclePlusFresh", "k>=6", coloring, m - (k - math.ceil(k / 2)))

    if k == 3:
        v1, v2, v3 = prof.cycle
        p = start()
        if nt == 3:
            p.paint(g.edge_id(v1, v2), _tree_color(g, p, prof, v3))
            p.paint(g.edge_id(v2, v3), _tree_color(g, p, prof, v1))
            p.paint(g.edge_id(v1, v3), _tree_color(g, p, prof, v2))
            return UnicyclicScheme("UnicyclicK3", "1.1", p.finish(), m - 3)
        p.same((v1, v2), (v2, v3), (v1, v3))
        return UnicyclicScheme("UnicyclicK3", "1.2", p.finish(), m - 2)

    if k == 4:
        if nt >= 3:
            # v2 is the trivial vertex when one exists
            v1, v2, v3, v4 = next(
                o for o in _orientations(prof.cycle) if nontriv[o[0]] and nontriv[o[2]] and nontriv[o[3]]
            )
            p = start()
            p.paint(g.edge_id(v2, v3), _tree_color(g, p, prof, v4))
            p.paint(g.edge_id(v3, v4), _tree_color(g, p, prof, v1))
            p.paint(g.edge_id(v4, v1), _tree_color(g, p, prof, v3))
            return UnicyclicScheme("UnicyclicK4", "2.1", p.finish(), m - 3)
        if nt == 2:
            adjacent = next((o for o in _orientations(prof.cycle) if nontriv[o[0]] and nontriv[o[1]]), None)
            if adjacent is not None:
                v1, v2, v3, v4 = adjacent
                p = start()
                p.paint(g.edge_id(v2, v3), _tree_color(g, p, prof, v1))
                p.paint(g.edge_id(v1, v4), _tree_color(g, p, prof, v2))
                p.same((v1, v2), (v3, v4))
                return UnicyclicScheme("UnicyclicK4", "2.2.1", p.finish(), m - 3)
        roots = [v for v in prof.cycle if nontriv[v]]
        if all(endpoint[v] for v in roots):
            v1, v2, v3, v4 = prof.cycle
            p = start()
            p.same((v1, v2), (v3, v4))
            p.same((v2, v3), (v1, v4))
            case = "2.2.2-G2" if nt == 2 else "2.3-G3"
            return UnicyclicScheme("UnicyclicK4", case, p.finish(), m - 2)
        # some pendant tree has a vertex with two children
        orient = next(o for o in _orientations(prof.cycle) if nontriv[o[0]] and not endpoint[o[0]])
        v1, v2, v3, v4 = orient
        u1, son1, son2 = _branching(g, prof, v1)
        p = _Painter(g)
        for i, root in enumerate(prof.cycle):
            for e in sorted(prof.tree_edges[i]):
                p.paint(e, p.fresh())
        p.paint(g.edge_id(v1, v2), p.fresh())
        p.paint(g.edge_id(v1, v4), p.colors[g.edge_id(v1, v2)])
        p.paint(g.edge_id(v2, v3), p.colors[g.edge_id(u1, son1)])
        p.paint(g.edge_id(v3, v4), p.colors[g.edge_id(u1, son2)])
        case = "2.2.2-branch" if nt == 2 else "2.3-branch"
        return UnicyclicScheme("UnicyclicK4", case, p.finish(), m - 3)

    # k == 5
    if nt == 0:
        return UnicyclicScheme("UnicyclicK5", "3-C5", EdgeColoring.of(g, _cycle_colors_on(g, prof.cycle)), m - 2)
    v1, v2, v3, v4, v5 = next(o for o in _orientations(prof.cycle) if nontriv[o[0]])
    p = start()
    p.paint(g.edge_id(v3, v4), _tree_color(g, p, prof, v1))
    p.same((v1, v2), (v4, v5))
    p.same((v2, v3), (v1, v5))
    return UnicyclicScheme("UnicyclicK5", "3", p.finish(), m - 3)


def _cycle_colors_on(g: Graph, walk: Sequence[int]) -> list[int]:
    k = len(walk)
    colors = [0] * g.m
    for i, color in enumerate(cycle_color_sequence(k)):
        colors[g.edge_id(walk[i], walk[(i + 1) % k])] = color
    return colors


def unicyclic_coloring(g: Graph, *, fallback: bool = True) -> EdgeColoring:
    """Case-by-case coloring of a unicyclic graph with cycle length 3, 4 or 5.

    Longer cycles fall back to :func:`cycle_plus_fresh` unless ``fallback`` is
    false, in which case :class:`CycleTooLong` is raised.
    """
    scheme = unicyclic_scheme(g, fallback=fallback)
    return _verified(g, scheme.coloring, f"unicyclic case {scheme.case}")


# ---------------------------------------------------------------------------
# schemes for graphs with two or more short cycles


@dataclass(frozen=True)
class SchemeId:
    tag: str
    variant: str | None = None

    def __str__(self) -> str:
        return self.tag if self.variant is None else f"{self.tag}:{self.variant}"

    @classmethod
    def parse(cls, text: str) -> "SchemeId":
        tag, _, variant = text.partition(":")
        return cls(tag, variant or None)


CLAIM2_VARIANTS = (
    "2.1-long",
    "2.2.1",
    "2.2.2-long",
    "2.2.3",
    "2.3.1",
    "2.3.2",
    "thm2-2.1-l>=3",
    "thm2-2.2-l>=2",
    "thm2-claim3",
)

# fewer colors than m each scheme promises
_SAVINGS = {
    "2.1-long": 3,
    "2.2.1": 3,
    "2.2.2-long": 3,
    "2.2.3": 4,
    "2.3.1": 3,
    "2.3.2": 3,
}


def _walk_from(cycle: Cycle, first: int, second: int) -> tuple[int, ...]:
    """The cycle's vertices starting ``first, second, ...``."""
    vs = list(cycle.vertices)
    i = vs.index(first)
    walk = vs[i:] + vs[:i]
    if walk[1] != second:
        walk = [walk[0]] + walk[:0:-1]
    assert walk[1] == second
    return tuple(walk)


def _opposite_index(k: int) -> int:
    """1-based index j of the edge v_j v_{j+1} paired with v_2 v_3 on a k-cycle."""
    half = k // 2
    return half + 2 if k % 2 == 0 else half + 3


def _edge_at(walk: Sequence[int], j: int) -> tuple[int, int]:
    """Edge v_j v_{j+1} of a 1-based cyclic walk."""
    k = len(walk)
    return walk[(j - 1) % k], walk[j % k]


def _shared_path(c1: Cycle, c2: Cycle, g: Graph) -> list[tuple[int, int]]:
    shared = set(c1.edges) & set(c2.edges)
    return [g.edges[e] for e in sorted(shared)]


def _labelings_one_edge(g, c1, c2):
    (x, y), = _shared_path(c1, c2, g)
    for u1, u2 in ((x, y), (y, x)):
        yield _walk_from(c1, u1, u2), _walk_from(c2, u1, u2)


def _labelings_two_edges(g, c1, c2):
    e, f = _shared_path(c1, c2, g)
    mid = (set(e) & set(f)).pop()
    a = e[0] if e[1] == mid else e[1]
    b = f[0] if f[1] == mid else f[1]
    for u1 in (a, b):
        yield _walk_from(c1, u1, mid), _walk_from(c2, u1, mid)


def _scheme_21_long(g, c1, c2, p):
    if len(c1) != 3 or intersection_pattern(g, c1, c2) != Pattern.ONE_COMMON_EDGE or len(c2) < 5:
        return
    for u, v in _labelings_one_edge(g, c1, c2):
        p_ = p()
        p_.same((u[0], u[1]), (u[1], u[2]), (u[0], u[2]))
        p_.same(_edge_at(v, 2), _edge_at(v, _opposite_index(len(v))))
        yield p_


def _scheme_221(g, c1, c2, p):
    if len(c1) != 4 or intersection_pattern(g, c1, c2) != Pattern.ONE_COMMON_EDGE:
        return
    for u, v in _labelings_one_edge(g, c1, c2):
        u1, u2, u3, u4 = u
        p_ = p()
        p_.same((v[1], v[2]), (u4, v[0]))
        p_.same((v[1], u3), (v[0], v[-1]))
        p_.same((v[0], v[1]), (u3, u4))
        yield p_


def _scheme_222_long(g, c1, c2, p):
    if len(c1) != 4 or intersection_pattern(g, c1, c2) != Pattern.TWO_COMMON_ADJACENT_EDGES or len(c2) < 6:
        return
    for u, v in _labelings_two_edges(g, c1, c2):
        u4 = u[3]
        p_ = p()
        p_.same((u4, v[0]), (v[2], v[3]))
        p_.same((v[0], v[1]), (v[2], u4))
        p_.same((v[1], v[2]), _edge_at(v, _opposite_index(len(v))))
        yield p_


def _scheme_223(g, c1, c2, p):
    if intersection_pattern(g, c1, c2) != Pattern.EDGE_DISJOINT_4_CYCLES:
        return
    for u1 in sorted(set(c1.vertices) & set(c2.vertices)):
        for a in (1, -1):
            for b in (1, -1):
                i = c1.vertices.index(u1)
                u = [c1.vertices[(i + a * j) % 4] for j in range(4)]
                i = c2.vertices.index(u1)
                v = [c2.vertices[(i + b * j) % 4] for j in range(4)]
                p_ = p()
                p_.same((u[0], u[1]), (u[2], u[3]))
                p_.same((u[1], u[2]), (u[0], u[3]))
                p_.same((u[0], v[1]), (u[2], v[3]))
                p_.same((v[1], u[2]), (u[0], v[3]))
                yield p_


def _scheme_231(g, c1, c2, p):
    if len(c1) != 5 or intersection_pattern(g, c1, c2) != Pattern.ONE_COMMON_EDGE:
        return
    for u, v in _labelings_one_edge(g, c1, c2):
        u1, u2, u3, u4, u5 = u
        p_ = p()
        p_.same((u4, u5), (v[1], v[2]))
        p_.same((v[0], u5), (v[1], u3))
        p_.same((v[0], v[1]), (u3, u4))
        yield p_


def _scheme_232(g, c1, c2, p):
    if len(c1) != 5 or intersection_pattern(g, c1, c2) != Pattern.TWO_COMMON_ADJACENT_EDGES:
        return
    for u, v in _labelings_two_edges(g, c1, c2):
        u4, u5 = u[3], u[4]
        p_ = p()
        p_.same((v[0], u5), (v[2], v[3]))
        p_.same((v[0], v[1]), (v[2], u4))
        p_.same((v[1], v[2]), (u4, u5))
        yield p_


_CYCLE_PAIR_SCHEMES = {
    "2.1-long": _scheme_21_long,
    "2.2.1": _scheme_221,
    "2.2.2-long": _scheme_222_long,
    "2.2.3": _scheme_223,
    "2.3.1": _scheme_231,
    "2.3.2": _scheme_232,
}


def _first_verified(g: Graph, candidates: Iterator[_Painter], variant: str) -> EdgeColoring:
    tried = 0
    last = None
    for painter in candidates:
        tried += 1
        try:
            coloring = painter.finish()
        except SchemeNotApplicable:
            continue
        verdict = is_strongly_rainbow_connected(g, coloring)
        if verdict:
            return coloring
        last = (coloring.colors, verdict.witness)
    if tried == 0:
        raise SchemeNotApplicable(f"scheme {variant} does not apply to {g!r}")
    raise ConstructionFailed(f"scheme {variant}: all {tried} labelings fail; last {last}")


def _packing_context(g: Graph):
    """A maximum packing and the smallest cycle that is not one of its triangles."""
    packing = max_edge_disjoint_triangles(g)
    packed = {tri.edges for tri in packing.triangles}
    for cycle in iter_cycles(g):
        if cycle.edges not in packed:
            return packing, cycle
    return packing, None


def _thm2_labelings(g: Graph, packing: TrianglePacking, cycle: Cycle, parity: int, min_k: int):
    k = len(cycle)
    if k % 2 != parity or k < min_k:
        return
    owner = {}
    for tri in packing.triangles:
        for e in tri.edges:
            owner[e] = tri
    if any(len(set(cycle.edges) & set(tri.edges)) > 1 for tri in packing.triangles):
        return
    half = k // 2
    for walk in _orientations(cycle.vertices):
        u = (None,) + walk  # 1-based

        def eid(i, j):
            return g.edge_id(u[(i - 1) % k + 1], u[(j - 1) % k + 1])

        t1 = owner.get(eid(1, 2))
        t2 = owner.get(eid(half + 1, half + 2))
        if t1 is None or t2 is None or t1 == t2:
            continue
        w1 = next(x for x in t1.vertices if x not in (u[1], u[2]))
        w2 = next(x for x in t2.vertices if x not in (u[half + 1], u[half + 2]))
        yield u, w1, w2, t1, t2, owner, eid


def _thm2_painter(g: Graph, packing: TrianglePacking, skip) -> _Painter:
    p = _Painter(g)
    for tri in packing.triangles:
        if tri in skip:
            continue
        color = p.fresh()
        for e in tri.edges:
            p.paint(e, color)
    return p


def _scheme_thm2_even(g: Graph) -> Iterator[_Painter]:
    packing, cycle = _packing_context(g)
    if cycle is None or not set(cycle.edges) & packing.edge_set():
        return
    k = len(cycle)
    half = k // 2
    for u, w1, w2, t1, t2, owner, eid in _thm2_labelings(g, packing, cycle, 0, 6):
        paired = [eid(2, 3), eid(1, k), eid(half + 2, half + 3), eid(half, half + 1)]
        if any(e in owner for e in paired):
            continue
        p = _thm2_painter(g, packing, (t1, t2))
        p.same((u[1], w1), (u[2], u[3]))
        p.same((u[2], w1), (u[1], u[k]))
        p.same((u[1], u[2]), (u[half + 1], u[half + 2]))
        p.same((w2, u[half + 1]), (u[half + 2], u[(half + 2) % k + 1]))
        p.same((w2, u[half + 2]), (u[half], u[half + 1]))
        yield p


def _scheme_thm2_odd(g: Graph) -> Iterator[_Painter]:
    packing, cycle = _packing_context(g)
    if cycle is None or not set(cycle.edges) & packing.edge_set():
        return
    k = len(cycle)
    half = k // 2
    for u, w1, w2, t1, t2, owner, eid in _thm2_labelings(g, packing, cycle, 1, 5):
        paired = [eid(2, 3), eid(1, k), eid(half + 2, half + 3)]
        if any(e in owner for e in paired):
            continue
        p = _thm2_painter(g, packing, (t1, t2))
        p.same((u[1], w1), (u[2], u[3]))
        p.same((u[2], w1), (u[1], u[k]))
        p.same((u[half + 1], w2), (u[half + 2], u[(half + 2) % k + 1]))
        p.same((u[1], u[2]), (u[half + 1], u[half + 2]), (w2, u[half + 2]))
        yield p


def _scheme_thm2_claim3(g: Graph) -> Iterator[_Painter]:
    require_connected(g)
    if any(len(b) not in (1, 3) for b in blocks(g).blocks):
        return
    tris = triangles(g)
    for tri in tris:
        v1, v2, v3 = tri.vertices
        if min(g.degree(v) for v in tri.vertices) < 3:
            continue
        p = _Painter(g)
        for other in tris:
            if other is tri:
                continue
            color = p.fresh()
            for e in other.edges:
                p.paint(e, color)
        for e in range(g.m):
            if e not in tri.edges and e not in p.colors:
                p.paint(e, p.fresh())

        def from_side(v):
            e = min(x for x in g.incident(v) if x not in tri.edges)
            return p.colors[e]

        p.paint(g.edge_id(v1, v3), from_side(v2))
        p.paint(g.edge_id(v1, v2), from_side(v3))
        p.paint(g.edge_id(v2, v3), from_side(v1))
        yield p


def claim2_scheme_coloring(g: Graph, s: SchemeId | str) -> EdgeColoring:
    """Color ``g`` by one of the textual multi-cycle schemes.

    ``s`` names the variant (``"2.2.1"``, ``"thm2-claim3"``, ...). Every
    admissible choice of the two cycles and of their vertex labels is tried in
    canonical order; the first verified coloring is returned.
    """
    require_connected(g)
    variant = s.variant if isinstance(s, SchemeId) else str(s)
    if variant not in CLAIM2_VARIANTS:
        raise SchemeNotApplicable(f"unknown or figure-only scheme {variant!r}")
    if variant in _CYCLE_PAIR_SCHEMES:
        build = _CYCLE_PAIR_SCHEMES[variant]

        def candidates():
            for c1, c2 in cycle_pairs(g):
                yield from build(g, c1, c2, lambda: _Painter(g))

        return _first_verified(g, candidates(), variant)
    if variant == "thm2-2.1-l>=3":
        return _first_verified(g, _scheme_thm2_even(g), variant)
    if variant == "thm2-2.2-l>=2":
        return _first_verified(g, _scheme_thm2_odd(g), variant)
    return _first_verified(g, _scheme_thm2_claim3(g), variant)


def claim2_expected_colors(g: Graph, variant: str) -> int:
    """Color count the scheme promises on ``g``."""
    if variant in _SAVINGS:
        return g.m - _SAVINGS[variant]
    t = max_edge_disjoint_triangles(g).t
    if variant == "thm2-claim3":
        t = len(gbar_triangles(g) or triangles(g))
    return g.m - 2 * t - 1


# ---------------------------------------------------------------------------
# dispatcher


SCHEME_TAGS = ("CycleChartrand", "CyclePlusFresh", "TrianglePacking", "UnicyclicK3", "UnicyclicK4", "UnicyclicK5", "Claim2Config")


def color_by_scheme(g: Graph, s: SchemeId | str) -> EdgeColoring:
    """Run the named scheme on ``g`` (the CLI entry point for constructions)."""
    sid = SchemeId.parse(s) if isinstance(s, str) else s
    if sid.tag == "CycleChartrand":
        prof_cycle = smallest_cycle(g)
        if prof_cycle is None or len(prof_cycle) != g.m or g.m != g.n:
            raise SchemeNotApplicable("CycleChartrand needs a cycle graph")
        return EdgeColoring.of(g, _cycle_colors_on(g, prof_cycle.vertices))
    if sid.tag == "CyclePlusFresh":
        return cycle_plus_fresh(g)
    if sid.tag == "TrianglePacking":
        return triangle_packing_coloring(g, max_edge_disjoint_triangles(g))
    if sid.tag in ("UnicyclicK3", "UnicyclicK4", "UnicyclicK5"):
        try:
            prof = pendant_profile(g)
        except NotUnicyclic as exc:
            raise SchemeNotApplicable(str(exc)) from None
        if prof.k != int(sid.tag[-1]):
            raise SchemeNotApplicable(f"{sid.tag} needs cycle length {sid.tag[-1]}, got {prof.k}")
        return unicyclic_coloring(g)
    if sid.tag == "Claim2Config":
        if sid.variant is None:
            raise SchemeNotApplicable("Claim2Config needs a variant, e.g. Claim2Config:2.2.1")
        return claim2_scheme_coloring(g, sid)
    raise SchemeNotApplicable(f"unknown scheme tag {sid.tag!r}")


def candidate_colorings(g: Graph) -> Iterator[tuple[str, EdgeColoring]]:
    """Every construction that applies to ``g`` (unverified), cheapest first to try."""
    yield "all-fresh", EdgeColoring.of(g, range(g.m))
    yield "TrianglePacking", triangle_packing_coloring(g, max_edge_disjoint_triangles(g))
    if smallest_cycle(g) is not None:
        yield "CyclePlusFresh", cycle_plus_fresh(g)
    if g.m == g.n:
        yield "Unicyclic", unicyclic_scheme(g).coloring
    for variant in CLAIM2_VARIANTS:
        try:
            yield f"Claim2Config:{variant}", claim2_scheme_coloring(g, variant)
        except (SchemeNotApplicable, ConstructionFailed):
            continue

