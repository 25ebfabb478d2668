"""Simple undirected graphs with stable edge ids, plus the metric and
structural primitives the rest of the package is built on.

Vertices are ``0..n-1`` and edges are numbered ``0..m-1`` in construction
order, so an edge coloring is just a sequence indexed by edge id.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    Disconnected,
    LoopEdge,
    MalformedGraph6,
    TooLarge,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        index = {}
        for i, (u, v) in enumerate(self.edges):
            index[(u, v)] = i
            index[(v, u)] = i
        return index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise KeyError(f"{u}-{v} is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def incident(self, v: int) -> list[int]:
        """Edge ids incident to ``v``, ascending."""
        return sorted(self.edge_index[(v, w)] for w in self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={emit_graph6(self)!r})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph; duplicate pairs collapse onto their first occurrence."""
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``; edges in graph6 order."""
    pos = {v: i for i, v in enumerate(order)}
    pairs = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges),
        key=lambda e: (e[1], e[0]),
    )
    return Graph(g.n, tuple(pairs))


# ---------------------------------------------------------------------------
# small named families


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(k: int) -> Graph:
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def prism_graph() -> Graph:
    """The triangular prism C3 x K2."""
    return from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def bowtie_graph() -> Graph:
    return from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


# ---------------------------------------------------------------------------
# graph6


def _graph6_size(n: int) -> str:
    if n > 62:
        raise TooLarge("only the short graph6 form (n <= 62) is supported")
    return chr(n + 63)


def emit_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = [_graph6_size(g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line.

    Edge ids follow the graph6 bit order: column ``j`` ascending, then row
    ``i < j`` ascending.
    """
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(ch) - 63 for ch in text]
    if any(c < 0 or c > 63 for c in codes):
        raise MalformedGraph6(f"byte outside 63..126 in {text!r}")
    n = codes[0]
    if n == 63:
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"{text!r}: expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = [(c >> (5 - k)) & 1 for c in body for k in range(6)]
    if any(bits[nbits:]):
        raise MalformedGraph6(f"{text!r}: nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, tuple(edges))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse graph6 lines, skipping blanks and ``#`` comments."""
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_graph6(line)


# ---------------------------------------------------------------------------
# metric primitives


def distances(g: Graph, s: int) -> list[int]:
    """BFS hop distances from ``s``; unreachable vertices get -1."""
    if not 0 <= s < g.n:
        raise VertexOutOfRange(f"vertex {s} outside [0, {g.n})")
    dist = [-1] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n > 0 and min(distances(g, 0)) >= 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected(f"{g!r} is not connected")


def distance_matrix(g: Graph) -> list[list[int]]:
    return [distances(g, s) for s in range(g.n)]


def diameter(g: Graph) -> int:
    require_connected(g)
    return max(max(row) for row in distance_matrix(g))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def components(g: Graph) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        for v, d in enumerate(distances(g, s)):
            if d >= 0:
                seen[v] = True
    return count


@dataclass(frozen=True)
class ShortestPathDag:
    source: int
    dist: tuple[int, ...]
    parents: tuple[frozenset[int], ...]

    def geodesics(self, v: int) -> Iterator[tuple[int, ...]]:
        """Every source->v geodesic as a vertex tuple starting at the source."""
        if self.dist[v] < 0:
            return
        stack = [(v, (v,))]
        while stack:
            w, suffix = stack.pop()
            if w == self.source:
                yield suffix
                continue
            for p in sorted(self.parents[w], reverse=True):
                stack.append((p, (p,) + suffix))


def shortest_path_dag(g: Graph, s: int) -> ShortestPathDag:
    dist = distances(g, s)
    parents = tuple(
        frozenset(p for p in g.adj[w] if dist[p] >= 0 and dist[p] == dist[w] - 1) if w != s else frozenset()
        for w in range(g.n)
    )
    return ShortestPathDag(s, tuple(dist), parents)


def path_edges(g: Graph, path: Sequence[int]) -> list[int]:
    return [g.edge_id(a, b) for a, b in zip(path, path[1:])]


# ---------------------------------------------------------------------------
# cycles


@dataclass(frozen=True)
class Cycle:
    """A cycle as a closed vertex walk ``vertices[0] .. vertices[-1] -> vertices[0]``.

    ``vertices`` starts at the least vertex and heads toward its smaller
    cycle neighbour; ``edges`` is the sorted tuple of edge ids, which is also
    the tie-break key between cycles of equal length.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.vertices), self.edges)


def _make_cycle(g: Graph, walk: Sequence[int]) -> Cycle:
    k = len(walk)
    i = walk.index(min(walk))
    rotated = list(walk[i:]) + list(walk[:i])
    if k > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    edge_ids = tuple(sorted(g.edge_id(rotated[j], rotated[(j + 1) % k]) for j in range(k)))
    return Cycle(tuple(rotated), edge_ids)


def cycles_of_length(g: Graph, length: int) -> list[Cycle]:
    """All cycles with exactly ``length`` edges, sorted by edge-id key."""
    found = []
    for s in range(g.n):
        stack = [(s, (s,))]
        while stack:
            u, walk = stack.pop()
            if len(walk) == length:
                if s in g.adj[u] and walk[1] < walk[-1]:
                    found.append(_make_cycle(g, walk))
                continue
            for w in g.adj[u]:
                if w > s and w not in walk:
                    stack.append((w, walk + (w,)))
    found.sort(key=lambda c: c.edges)
    return found


def iter_cycles(g: Graph, max_length: int | None = None) -> Iterator[Cycle]:
    """Cycles in order of (length, edge-id key)."""
    top = g.n if max_length is None else min(max_length, g.n)
    for length in range(3, top + 1):
        yield from cycles_of_length(g, length)


def girth(g: Graph) -> int | None:
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def smallest_cycle(g: Graph) -> Cycle | None:
    for length in range(3, g.n + 1):
        cycles = cycles_of_length(g, length)
        if cycles:
            return cycles[0]
    return None


def smallest_two_cycles(g: Graph) -> tuple[Cycle, Cycle] | None:
    """The minimum cycle and the minimum among the remaining cycles.

    Ties are broken by the lexicographically least sorted edge-id tuple.
    """
    first = None
    for length in range(3, g.n + 1):
        cycles = cycles_of_length(g, length)
        if not cycles:
            continue
        if first is None:
            first = cycles[0]
            if len(cycles) > 1:
                return first, cycles[1]
        else:
            return first, cycles[0]
    return None


def cycle_pairs(g: Graph) -> Iterator[tuple[Cycle, Cycle]]:
    """Every admissible (smallest, next-smallest) choice, canonical pair first.

    ``C1`` ranges over minimum-length cycles and ``C2`` over the shortest
    cycles different from ``C1``.
    """
    lengths = []
    for length in range(3, g.n + 1):
        cycles = cycles_of_length(g, length)
        if cycles:
            lengths.append(cycles)
        if len(lengths) == 2 or (lengths and len(lengths[0]) > 1):
            break
    if not lengths:
        return
    shortest = lengths[0]
    if len(shortest) > 1:
        for c1 in shortest:
            for c2 in shortest:
                if c2 is not c1:
                    yield c1, c2
    elif len(lengths) == 2:
        for c2 in lengths[1]:
            yield shortest[0], c2


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    bridges: frozenset[int]

    def block_vertices(self, g: Graph, block: frozenset[int]) -> set[int]:
        return {v for e in block for v in g.edges[e]}


def blocks(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components over edge ids."""
    require_connected(g)
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[int] = []
    timer = 0

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent edge id, neighbour iterator)
    stack = [(root, -1, iter(sorted(g.adj[root])))]
    while stack:
        u, pe, it = stack[-1]
        advanced = False
        for w in it:
            e = g.edge_id(u, w)
            if e == pe:
                continue
            if disc[w] < 0:
                edge_stack.append(e)
                disc[w] = low[w] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append((w, e, iter(sorted(g.adj[w]))))
                advanced = True
                break
            if disc[w] < disc[u]:
                edge_stack.append(e)
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        low[p] = min(low[p], low[u])
        if low[u] >= disc[p]:
            if p != root:
                cuts.add(p)
            comp = set()
            while True:
                e = edge_stack.pop()
                comp.add(e)
                if e == pe:
                    break
            found.append(frozenset(comp))
    if root_children > 1:
        cuts.add(root)
    found.sort(key=min)
    bridges = frozenset(next(iter(b)) for b in found if len(b) == 1)
    return BlockDecomposition(tuple(found), frozenset(cuts), bridges)


def bridges(g: Graph) -> frozenset[int]:
    return blocks(g).bridges


# ---------------------------------------------------------------------------
# canonical form


MAX_CANONICAL_N = 10


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; sub-cells ordered by signature."""
    while True:
        where = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                where[v] = idx
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sigs = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in g.adj[v]:
                    counts[where[w]] += 1
                sigs[v] = tuple(counts)
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                groups.setdefault(sigs[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] - {v} == g.adj[v] - {u}


def canonical_order(g: Graph) -> list[int]:
    """A vertex order that is identical (up to automorphism) for isomorphic graphs."""
    if g.n > MAX_CANONICAL_N:
        raise TooLarge(f"canonical form supports n <= {MAX_CANONICAL_N}")
    if g.n == 0:
        return []
    degree_cells: dict[int, list[int]] = {}
    for v in range(g.n):
        degree_cells.setdefault(g.degree(v), []).append(v)
    start = _refine(g, [degree_cells[d] for d in sorted(degree_cells)])

    best: tuple[str, list[int]] | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = emit_graph6(relabel(g, order))
            if best is None or code < best[0]:
                best = (code, order)
            return
        tried: list[int] = []
        for v in cells[target]:
            # swapping twins in one cell is an automorphism of the partition
            if any(_twins(g, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in cells[target] if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(g, split))

    search(start)
    assert best is not None
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 bytes of the canonical relabeling."""
    return emit_graph6(canonical_graph(g)).encode("ascii")
