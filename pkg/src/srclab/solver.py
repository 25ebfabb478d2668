"""Exact strong rainbow / rainbow connection numbers by exhaustive search.

Colorings are enumerated as set partitions of the edge ids in
restricted-growth form, one color count ``k`` at a time from the diameter
upward, so the first coloring that passes is optimal. Bridges must carry
pairwise distinct colors in any (strong) rainbow coloring, so they are fixed
to the singleton labels ``0..b-1`` and only the remaining edges are searched.

Candidate colorings are screened in numpy batches against every precomputed
geodesic (or simple path, for ``rc``); the winning coloring is re-checked by
the DAG verifier in :mod:`srclab.coloring` before it is returned.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .coloring import EdgeColoring, Verdict, is_rainbow_connected, is_strongly_rainbow_connected
from .errors import BudgetExceeded, ConstructionFailed, SrcLabError
from .graph import Graph, bridges, diameter, distance_matrix, path_edges, require_connected, shortest_path_dag

DEFAULT_BUDGET = 200_000_000
BATCH_ROWS = 1 << 15


def default_budget() -> int:
    raw = os.environ.get("SRC_LAB_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class SolveStats:
    examined: int
    elapsed_ms: float


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: EdgeColoring
    stats: SolveStats = field(compare=False)
    mode: str = "src"


# ---------------------------------------------------------------------------
# path systems


class PathSystem:
    """Per vertex pair, the edge-id paths of which at least one must be rainbow.

    Pairs at distance one are omitted: a single edge is always rainbow.
    """

    def __init__(self, pairs: list[tuple[int, int]], paths: list[list[tuple[int, ...]]]):
        self.pairs = pairs
        # length -> (edge array [P, L], pair index per row)
        grouped: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
        for idx, plist in enumerate(paths):
            for p in plist:
                grouped.setdefault(len(p), []).append((idx, p))
        self.groups = []
        for length in sorted(grouped):
            rows = sorted(grouped[length])
            owner = np.array([r[0] for r in rows], dtype=np.intp)
            edges = np.array([r[1] for r in rows], dtype=np.intp).reshape(len(rows), length)
            uniq, starts = np.unique(owner, return_index=True)
            self.groups.append((length, edges, uniq, starts))

    def check(self, colorings: np.ndarray, max_length: int | None = None) -> np.ndarray:
        """Boolean mask over rows of ``colorings`` that satisfy every pair."""
        n_rows = colorings.shape[0]
        satisfied = np.zeros((n_rows, len(self.pairs)), dtype=bool)
        for length, edges, uniq, starts in self.groups:
            if max_length is not None and length > max_length:
                continue
            picked = np.sort(colorings[:, edges], axis=2)
            rainbow = np.all(picked[:, :, 1:] != picked[:, :, :-1], axis=2)
            satisfied[:, uniq] |= np.logical_or.reduceat(rainbow, starts, axis=1)
        return satisfied.all(axis=1)


@lru_cache(maxsize=4096)
def geodesic_system(g: Graph) -> PathSystem:
    pairs, paths = [], []
    for u in range(g.n):
        dag = shortest_path_dag(g, u)
        for v in range(u + 1, g.n):
            if dag.dist[v] > 1:
                pairs.append((u, v))
                paths.append([tuple(path_edges(g, p)) for p in dag.geodesics(v)])
    return PathSystem(pairs, paths)


def _simple_paths(g: Graph, u: int, v: int, cap: int) -> list[tuple[int, ...]]:
    out = []
    stack = [(u, (u,))]
    while stack:
        w, walk = stack.pop()
        if w == v:
            out.append(tuple(path_edges(g, walk)))
            continue
        if len(walk) > cap:
            continue
        for x in g.adj[w]:
            if x not in walk:
                stack.append((x, walk + (x,)))
    return out


@lru_cache(maxsize=1024)
def path_system(g: Graph) -> PathSystem:
    """All simple paths per non-adjacent pair (rainbow connection)."""
    dist = distance_matrix(g)
    pairs, paths = [], []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if dist[u][v] > 1:
                pairs.append((u, v))
                paths.append(_simple_paths(g, u, v, g.m))
    return PathSystem(pairs, paths)


# ---------------------------------------------------------------------------
# restricted-growth enumeration


def restricted_growth_batches(
    length: int, k: int, start_max: int = -1, batch_rows: int = BATCH_ROWS
) -> Iterator[np.ndarray]:
    """Yield int8 arrays whose rows are restricted-growth strings.

    Each row ``x`` satisfies ``x[i] <= max(start_max, x[:i]) + 1`` and ends
    with maximum exactly ``k - 1``, i.e. rows are the set partitions of
    ``length`` items into labels ``0..k-1`` where labels ``<= start_max`` are
    pre-used. Rows come out in lexicographic order.
    """
    if k - 1 < start_max or k - 1 - start_max > length:
        return
    if length == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return

    def extend(rows: np.ndarray, maxes: np.ndarray) -> Iterator[np.ndarray]:
        pos = rows.shape[1]
        if pos == length:
            yield rows
            return
        remaining = length - pos - 1
        options = np.minimum(maxes + 1, k - 1) + 1
        parent = np.repeat(np.arange(rows.shape[0]), options)
        offsets = np.arange(parent.size) - np.repeat(np.cumsum(options) - options, options)
        value = offsets.astype(np.int8)
        new_max = np.maximum(maxes[parent], value)
        keep = new_max >= k - 1 - remaining
        parent, value, new_max = parent[keep], value[keep], new_max[keep]
        grown = np.concatenate([rows[parent], value[:, None]], axis=1)
        if grown.shape[0] <= batch_rows:
            yield from extend(grown, new_max)
            return
        for lo in range(0, grown.shape[0], batch_rows):
            yield from extend(grown[lo:lo + batch_rows], new_max[lo:lo + batch_rows])

    yield from extend(np.zeros((1, 0), dtype=np.int8), np.array([start_max], dtype=np.int8))


# ---------------------------------------------------------------------------
# exact search


def _verifier(mode: str) -> Callable[[Graph, EdgeColoring], Verdict]:
    return is_strongly_rainbow_connected if mode == "src" else is_rainbow_connected


def _solve(g: Graph, mode: str, budget: int | None, bridge_pruning: bool, lower: int | None) -> SolveResult:
    require_connected(g)
    if g.n < 2:
        raise SrcLabError("connection numbers need at least two vertices")
    budget = default_budget() if budget is None else budget
    started = time.perf_counter()
    system = geodesic_system(g) if mode == "src" else path_system(g)
    cut = sorted(bridges(g)) if bridge_pruning else []
    free = [e for e in range(g.m) if e not in set(cut)]
    b = len(cut)
    k = max(diameter(g), b, 1) if lower is None else max(lower, b, 1)
    examined = 0
    colorings = np.empty((0, g.m), dtype=np.int8)
    while k <= g.m:
        for batch in restricted_growth_batches(len(free), k, start_max=b - 1):
            if examined + batch.shape[0] > budget:
                bound, cert = _fallback_bound(g, mode)
                raise BudgetExceeded(
                    f"{mode} search exceeded budget {budget} at k={k}",
                    upper_bound=bound,
                    certificate=cert,
                    examined=examined,
                )
            examined += batch.shape[0]
            if colorings.shape[0] != batch.shape[0]:
                colorings = np.empty((batch.shape[0], g.m), dtype=np.int8)
                colorings[:, cut] = np.arange(b, dtype=np.int8)
            colorings[:, free] = batch
            passing = np.flatnonzero(system.check(colorings, max_length=k if mode == "rc" else None))
            if passing.size:
                cert = EdgeColoring.of(g, colorings[passing[0]].tolist())
                if not _verifier(mode)(g, cert):
                    raise ConstructionFailed(f"batch screen and verifier disagree on {cert.colors}")
                elapsed = (time.perf_counter() - started) * 1000
                return SolveResult(k, cert, SolveStats(examined, elapsed), mode)
        k += 1
    raise AssertionError("the all-distinct coloring always passes")  # pragma: no cover


def _fallback_bound(g: Graph, mode: str) -> tuple[int, EdgeColoring]:
    bound, cert = src_upper_via_construction(g)
    return bound, cert


def src_exact(
    g: Graph, budget: int | None = None, *, bridge_pruning: bool = True, lower: int | None = None
) -> SolveResult:
    """Minimum number of colors for a strong rainbow coloring, with certificate.

    ``lower`` overrides the starting color count (default: the diameter);
    pass it only when the value is a proven lower bound.
    """
    return _solve(g, "src", budget, bridge_pruning, lower)


def rc_exact(
    g: Graph, budget: int | None = None, *, bridge_pruning: bool = True, lower: int | None = None
) -> SolveResult:
    """Minimum number of colors for a rainbow coloring, with certificate."""
    return _solve(g, "rc", budget, bridge_pruning, lower)


def exists_coloring(g: Graph, k: int, mode: str = "src", *, bridge_pruning: bool = True) -> EdgeColoring | None:
    """Some coloring with exactly ``k`` colors that passes, or ``None``."""
    system = geodesic_system(g) if mode == "src" else path_system(g)
    cut = sorted(bridges(g)) if bridge_pruning else []
    free = [e for e in range(g.m) if e not in set(cut)]
    for batch in restricted_growth_batches(len(free), k, start_max=len(cut) - 1):
        colorings = np.empty((batch.shape[0], g.m), dtype=np.int8)
        colorings[:, cut] = np.arange(len(cut), dtype=np.int8)
        colorings[:, free] = batch
        passing = np.flatnonzero(system.check(colorings, max_length=k if mode == "rc" else None))
        if passing.size:
            return EdgeColoring.of(g, colorings[passing[0]].tolist())
    return None


def src_upper_via_construction(g: Graph) -> tuple[int, EdgeColoring]:
    """Best verified upper bound from the constructive colorings."""
    from .constructions import candidate_colorings

    require_connected(g)
    best = None
    for _, coloring in candidate_colorings(g):
        if best is not None and coloring.color_count >= best.color_count:
            continue
        if is_strongly_rainbow_connected(g, coloring):
            best = coloring
    assert best is not None
    return best.color_count, best
