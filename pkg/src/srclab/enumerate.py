"""Isomorphism-free enumeration of small connected graphs."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import TooLarge
from .graph import Graph, canonical_form, canonical_graph, from_edge_list, is_connected, read_graph6_lines

MAX_ENUMERATION_N = 8


def _add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph(g.n, g.edges + ((min(u, v), max(u, v)),))


def _dedup(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen[key] = canonical_graph(g)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """Unlabeled trees on exactly ``n`` vertices, grown by leaf addition."""
    if n == 1:
        return (Graph(1, ()),)

    def grown():
        for t in trees(n - 1):
            for v in range(n - 1):
                yield Graph(n, t.edges + ((v, n - 1),))

    return _dedup(grown())


@lru_cache(maxsize=None)
def connected_graphs(n: int, m: int) -> tuple[Graph, ...]:
    """Connected graphs with exactly ``n`` vertices and ``m`` edges, one per class.

    Every connected non-tree graph loses a cycle edge to a connected graph with
    one edge fewer, so adding edges to level ``m - 1`` reaches level ``m``.
    """
    if m < n - 1 or m > n * (n - 1) // 2:
        return ()
    if m == n - 1:
        return trees(n)

    def grown():
        for g in connected_graphs(n, m - 1):
            for v in range(n):
                for u in range(v):
                    if not g.has_edge(u, v):
                        yield _add_edge(g, u, v)

    return _dedup(grown())


@lru_cache(maxsize=None)
def unicyclic_graphs(n: int) -> tuple[Graph, ...]:
    """Unicyclic graphs on exactly ``n`` vertices (n <= 10): a cycle plus leaf additions."""
    if n < 3:
        return ()

    def grown():
        yield from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
        for g in unicyclic_graphs(n - 1):
            for v in range(n - 1):
                yield Graph(n, g.edges + ((v, n - 1),))

    return _dedup(grown())


def enumerate_connected_graphs(
    n_max: int, m_max: int | None = None, source: Iterable[str] | None = None, n_min: int = 2
) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs with
    ``n_min <= n <= n_max`` and ``m <= m_max``, ordered by (n, m, canonical key).

    With ``source`` (graph6 lines), its connected graphs within the bounds are
    yielded instead, in file order.
    """
    if source is not None:
        for g in read_graph6_lines(source):
            if g.n >= n_min and g.n <= n_max and (m_max is None or g.m <= m_max) and is_connected(g):
                yield g
        return
    if n_max > MAX_ENUMERATION_N:
        raise TooLarge(f"built-in enumeration supports n <= {MAX_ENUMERATION_N}")
    for n in range(max(n_min, 2), n_max + 1):
        top = n * (n - 1) // 2 if m_max is None else min(m_max, n * (n - 1) // 2)
        for m in range(n - 1, top + 1):
            yield from connected_graphs(n, m)
