"""Validation campaigns: exhaustive machine checks of the characterizations.

Each campaign walks a stream of graphs, computes what it needs per graph and
records a verdict. Per-graph work is independent, so it can be spread across
a process pool; results always come back in input order, which makes reports
identical across worker counts apart from timing fields.
"""
from __future__ import annotations

import csv
import io
import json
import platform
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache, partial
from typing import Callable, Iterable, Sequence

from . import __version__
from .coloring import EdgeColoring, cut_edge_colors_distinct, is_strongly_rainbow_connected
from .constructions import candidate_colorings, triangle_packing_coloring, unicyclic_scheme
from .enumerate import enumerate_connected_graphs, unicyclic_graphs
from .errors import BudgetExceeded, NotCubic
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_pairs,
    emit_graph6,
    girth,
    is_tree,
    parse_graph6,
    prism_graph,
    read_graph6_lines,
)
from .solver import SolveResult, rc_exact, src_exact
from .structure import (
    ALLOWED_PATTERNS,
    Pattern,
    classify,
    d2_tree,
    gbar_t,
    intersection_pattern,
    is_cubic,
    lemma1_configuration,
    line_graph,
    max_edge_disjoint_triangles,
    maximal_packings,
    pendant_profile,
    star_packing,
)

SCHEMA_VERSION = 1

CONFIRMED = "confirmed"
COUNTEREXAMPLE = "counterexample"
SKIPPED = "skipped: budget"

THEOREM1_CLASSES = frozenset({"C5", "G1", "G2", "G3"})


@dataclass
class ValidationReport:
    campaign: str
    params: dict
    results: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    environment: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def counterexamples(self) -> list[dict]:
        return [r for r in self.results if r["verdict"] == COUNTEREXAMPLE]

    @property
    def skipped(self) -> list[dict]:
        return [r for r in self.results if r["verdict"] == SKIPPED]

    @property
    def ok(self) -> bool:
        return self.summary.get("ok", not self.counterexamples)

    @property
    def complete(self) -> bool:
        """No counterexamples and nothing skipped: a full confirmation."""
        return self.ok and not self.skipped

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "ValidationReport":
        raw = json.loads(text)
        if raw.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {raw.get('schema_version')!r}")
        return cls(**raw)

    def to_csv(self) -> str:
        """One row per graph: graph6, n, m, verdict, then the scalar values."""
        keys: list[str] = []
        for r in self.results:
            for k, v in r.items():
                if k not in keys and not isinstance(v, (list, dict)):
                    keys.append(k)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for r in self.results:
            writer.writerow(r)
        return buf.getvalue()

    def without_timing(self) -> dict:
        d = self.to_dict()
        d["environment"] = {k: v for k, v in d["environment"].items() if k != "elapsed_s"}
        return d

    def certificates(self) -> Iterable[tuple[Graph, EdgeColoring]]:
        """Every coloring recorded in the report, re-attached to its graph."""
        for r in self.results:
            for key, colors in r.get("certificates", {}).items():
                g = parse_graph6(r.get("certificate_graph6", {}).get(key, r["graph6"]))
                yield g, EdgeColoring.of(g, colors)


def _summarize(results: list[dict]) -> dict:
    counts = {CONFIRMED: 0, COUNTEREXAMPLE: 0, SKIPPED: 0}
    for r in results:
        counts[r["verdict"]] += 1
    return {
        "graphs": len(results),
        "confirmations": counts[CONFIRMED],
        "counterexamples": counts[COUNTEREXAMPLE],
        "budget_exceeded": counts[SKIPPED],
        "ok": counts[COUNTEREXAMPLE] == 0,
    }


def _run(
    campaign: str,
    params: dict,
    graphs: Iterable[Graph],
    check: Callable[[Graph], dict | None],
    workers: int | None,
) -> ValidationReport:
    started = time.perf_counter()
    items = list(graphs)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(check, items, chunksize=8))
    else:
        raw = [check(g) for g in items]
    results = [r for r in raw if r is not None]
    env = {
        "version": __version__,
        "python": platform.python_version(),
        "elapsed_s": round(time.perf_counter() - started, 3),
    }
    return ValidationReport(campaign, params, results, _summarize(results), env)


def _graphs(n_max: int, m_max: int | None, source: Sequence[str] | str | None) -> Iterable[Graph]:
    if isinstance(source, str):
        with open(source) as fh:
            source = fh.read().splitlines()
    return enumerate_connected_graphs(n_max, m_max, source=source)


@lru_cache(maxsize=None)
def _src(g: Graph, budget: int | None) -> SolveResult:
    return src_exact(g, budget)


@lru_cache(maxsize=None)
def _rc(g: Graph, budget: int | None) -> SolveResult:
    return rc_exact(g, budget)


def _entry(g: Graph, **values) -> dict:
    return {"graph6": emit_graph6(g), "n": g.n, "m": g.m, **values}


def _skip(g: Graph, exc: BudgetExceeded) -> dict:
    return _entry(g, upper_bound=exc.upper_bound, examined=exc.examined, verdict=SKIPPED)


def _verdict(checks: dict[str, bool]) -> str:
    return CONFIRMED if all(checks.values()) else COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# src = m exactly on trees, never m - 1, m - 2 exactly on the classes


def _check_theorem1(g: Graph, budget: int | None, path_rule: str) -> dict:
    labels = classify(g, path_rule=path_rule)
    try:
        res = _src(g, budget)
    except BudgetExceeded as exc:
        return _skip(g, exc)
    src, m = res.value, g.m
    checks = {
        "tree_iff_m": (src == m) == ("Tree" in labels),
        "never_m_minus_1": src != m - 1,
        "m_minus_2_iff_class": (src == m - 2) == bool(labels & THEOREM1_CLASSES),
        "bridges_distinct": cut_edge_colors_distinct(g, res.certificate),
    }
    return _entry(
        g,
        src=src,
        labels=sorted(labels),
        checks=checks,
        verdict=_verdict(checks),
        certificates={"src": list(res.certificate.colors)},
    )


def validate_theorem1(
    n_max: int = 7,
    m_max: int | None = 10,
    *,
    source=None,
    budget: int | None = None,
    path_rule: str = "endpoint",
    workers: int | None = None,
) -> ValidationReport:
    """src = m iff tree; src != m - 1; src = m - 2 iff C5 / G1 / G2 / G3.

    ``path_rule`` is passed to the classifier; ``"any"`` is the looser reading
    of "pendant tree is a path" and exists to show the campaign notices it.
    """
    params = {"n_max": n_max, "m_max": m_max, "budget": budget, "path_rule": path_rule}
    check = partial(_check_theorem1, budget=budget, path_rule=path_rule)
    return _run("theorem1", params, _graphs(n_max, m_max, source), check, workers)


# ---------------------------------------------------------------------------
# src <= m - 2t, equality exactly on GBar(t)


def _check_theorem2(g: Graph, budget: int | None) -> dict:
    packing = max_edge_disjoint_triangles(g)
    t = packing.t
    bound = g.m - 2 * t
    labels = classify(g)
    member = gbar_t(labels) == t
    built = triangle_packing_coloring(g, packing)
    built_ok = bool(is_strongly_rainbow_connected(g, built))
    try:
        res = _src(g, budget)
    except BudgetExceeded as exc:
        return _skip(g, exc)
    checks = {
        "src_le_bound": res.value <= bound,
        "equality_iff_gbar": (res.value == bound) == member,
        "packing_coloring_verifies": built_ok and built.color_count == bound,
        "bridges_distinct": cut_edge_colors_distinct(g, res.certificate) and cut_edge_colors_distinct(g, built),
    }
    extra = {}
    if member:
        tree = d2_tree(g)
        checks["d2_tree"] = is_tree(tree) and tree.m == bound
        extra["d2_tree_graph6"] = emit_graph6(tree)
    return _entry(
        g,
        src=res.value,
        t_max=t,
        bound=bound,
        gbar=member,
        **extra,
        checks=checks,
        verdict=_verdict(checks),
        certificates={"src": list(res.certificate.colors), "packing": list(built.colors)},
    )


def validate_theorem2(
    n_max: int = 7, m_max: int | None = 10, *, source=None, budget: int | None = None, workers: int | None = None
) -> ValidationReport:
    params = {"n_max": n_max, "m_max": m_max, "budget": budget}
    check = partial(_check_theorem2, budget=budget)
    return _run("theorem2", params, _graphs(n_max, m_max, source), check, workers)


# ---------------------------------------------------------------------------
# packing colorings for every maximal packing


def _check_fact1(g: Graph, limit: int | None) -> dict:
    tried = failures = 0
    first_bad = None
    for packing in maximal_packings(g, limit):
        tried += 1
        c = triangle_packing_coloring(g, packing)
        if not (is_strongly_rainbow_connected(g, c) and c.color_count == g.m - 2 * packing.t):
            failures += 1
            first_bad = first_bad or [list(t.vertices) for t in packing.triangles]
    checks = {"every_packing_verifies": failures == 0}
    return _entry(g, packings_tried=tried, failures=failures, first_bad_packing=first_bad,
                  checks=checks, verdict=_verdict(checks))


def validate_fact1(
    n_max: int = 7, m_max: int | None = None, *, source=None, limit: int | None = None, workers: int | None = None
) -> ValidationReport:
    """The packing coloring verifies for every maximal edge-disjoint triangle packing."""
    params = {"n_max": n_max, "m_max": m_max, "limit": limit}
    return _run("fact1", params, _graphs(n_max, m_max, source), partial(_check_fact1, limit=limit), workers)


# ---------------------------------------------------------------------------
# how the two smallest cycles may meet


def _check_lemma1(g: Graph, all_pairs: bool) -> dict | None:
    gg = girth(g)
    if gg is None or not 3 <= gg <= 5:
        return None
    config = lemma1_configuration(g)
    if config.pattern == Pattern.NO_SECOND_CYCLE or config.shared_vertices < 2:
        return None
    checks = {"canonical_pair_allowed": config.allowed}
    extra = {}
    if all_pairs:
        seen = set()
        for c1, c2 in cycle_pairs(g):
            pattern = intersection_pattern(g, c1, c2)
            if pattern != Pattern.FEWER_THAN_TWO_COMMON_VERTICES:
                seen.add(pattern.value)
        extra["patterns_over_all_pairs"] = sorted(seen)
        checks["all_pairs_allowed"] = seen <= {p.value for p in ALLOWED_PATTERNS[gg]}
    c1, c2 = config.cycles
    return _entry(
        g,
        girth=gg,
        pattern=config.pattern.value,
        c1=list(c1.vertices),
        c2=list(c2.vertices),
        **extra,
        checks=checks,
        verdict=_verdict(checks),
    )


def validate_lemma1(
    n_max: int = 7, m_max: int | None = None, *, source=None, all_pairs: bool = False, workers: int | None = None
) -> ValidationReport:
    """Qualifying graphs: girth 3..5, a second cycle, two or more shared vertices.

    ``all_pairs`` also checks every admissible choice of the two cycles, not
    just the canonical one.
    """
    params = {"n_max": n_max, "m_max": m_max, "all_pairs": all_pairs}
    return _run("lemma1", params, _graphs(n_max, m_max, source), partial(_check_lemma1, all_pairs=all_pairs), workers)


# ---------------------------------------------------------------------------
# line graphs of cubic graphs


def builtin_cubic_graphs() -> list[Graph]:
    return [complete_graph(4), complete_bipartite(3, 3), prism_graph()]


def _check_corollary1(g: Graph, budget: int | None, exact_up_to_n: int) -> dict:
    if not is_cubic(g):
        raise NotCubic(f"{emit_graph6(g)} is not cubic")
    lg = line_graph(g)
    packing = star_packing(g)
    c = triangle_packing_coloring(lg, packing)
    verdict = is_strongly_rainbow_connected(lg, c)
    checks = {"n_triangles": packing.t == g.n, "uses_n_colors": c.color_count == g.n, "verifies": verdict.ok}
    extra = {}
    certs = {"line_graph": list(c.colors)}
    if g.n <= exact_up_to_n:
        try:
            res = _src(lg, budget)
            extra["src_line_graph"] = res.value
            checks["exact_le_n"] = res.value <= g.n
            certs["line_graph_exact"] = list(res.certificate.colors)
        except BudgetExceeded as exc:
            extra["src_line_graph"] = None
            extra["upper_bound"] = exc.upper_bound
    lg6 = emit_graph6(lg)
    return _entry(
        g,
        line_graph6=lg6,
        colors=c.color_count,
        **extra,
        checks=checks,
        verdict=_verdict(checks),
        certificates=certs,
        certificate_graph6={k: lg6 for k in certs},
    )


def validate_corollary1(
    source=None, *, budget: int | None = None, exact_up_to_n: int = 4, workers: int | None = None
) -> ValidationReport:
    """For cubic ``G``, the star triangles of L(G) give an n-color certificate."""
    if source is None:
        graphs = builtin_cubic_graphs()
    else:
        if isinstance(source, str):
            with open(source) as fh:
                source = fh.read().splitlines()
        graphs = list(read_graph6_lines(source))
    params = {"source": "builtin" if source is None else "file", "budget": budget, "exact_up_to_n": exact_up_to_n}
    return _run("corollary1", params, graphs, partial(_check_corollary1, budget=budget, exact_up_to_n=exact_up_to_n), workers)


# ---------------------------------------------------------------------------
# rc = 2 iff src = 2


def _check_proposition13(g: Graph, budget: int | None) -> dict:
    try:
        s = _src(g, budget)
        r = _rc(g, budget)
    except BudgetExceeded as exc:
        return _skip(g, exc)
    checks = {
        "rc2_iff_src2": (r.value == 2) == (s.value == 2),
        "rc_le_src": r.value <= s.value,
        "bridges_distinct": cut_edge_colors_distinct(g, s.certificate) and cut_edge_colors_distinct(g, r.certificate),
    }
    return _entry(
        g,
        rc=r.value,
        src=s.value,
        checks=checks,
        verdict=_verdict(checks),
        certificates={"src": list(s.certificate.colors), "rc": list(r.certificate.colors)},
    )


def validate_proposition13(
    n_max: int = 6, m_max: int | None = 10, *, source=None, budget: int | None = None, workers: int | None = None
) -> ValidationReport:
    params = {"n_max": n_max, "m_max": m_max, "budget": budget}
    return _run("proposition13", params, _graphs(n_max, m_max, source), partial(_check_proposition13, budget=budget), workers)


# ---------------------------------------------------------------------------
# bridges always get distinct colors


def _check_observation1(g: Graph, budget: int | None) -> dict:
    certs: dict[str, list[int]] = {}
    try:
        res = _src(g, budget)
        certs["src"] = list(res.certificate.colors)
    except BudgetExceeded:
        pass
    for name, c in candidate_colorings(g):
        if is_strongly_rainbow_connected(g, c):
            certs[name] = list(c.colors)
    bad = sorted(k for k, cols in certs.items() if not cut_edge_colors_distinct(g, EdgeColoring.of(g, cols)))
    checks = {"bridges_distinct": not bad}
    return _entry(g, certificates_checked=len(certs), failing=bad, checks=checks,
                  verdict=_verdict(checks), certificates=certs)


def validate_observation1(
    n_max: int = 7, m_max: int | None = 10, *, source=None, budget: int | None = None, workers: int | None = None
) -> ValidationReport:
    """Every verified certificate from the solver or a construction separates bridge colors."""
    params = {"n_max": n_max, "m_max": m_max, "budget": budget}
    return _run("observation1", params, _graphs(n_max, m_max, source), partial(_check_observation1, budget=budget), workers)


# ---------------------------------------------------------------------------
# unicyclic schemes against the exact solver


def _check_unicyclic(g: Graph, budget: int | None) -> dict | None:
    prof = pendant_profile(g)
    if prof.k > 5:
        return None
    labels = classify(g)
    member = bool(labels & THEOREM1_CLASSES)
    scheme = unicyclic_scheme(g)
    verdict = is_strongly_rainbow_connected(g, scheme.coloring)
    count = scheme.coloring.color_count
    try:
        res = _src(g, budget)
    except BudgetExceeded as exc:
        return _skip(g, exc)
    checks = {
        "verifies": verdict.ok,
        "at_least_src": count >= res.value,
        "within_claim": count <= scheme.claimed,
        "bridges_distinct": cut_edge_colors_distinct(g, scheme.coloring),
    }
    if member:
        checks["member_exact"] = count == res.value == g.m - 2
    else:
        checks["non_member_bound"] = count <= g.m - 2 and scheme.claimed == g.m - 3
    return _entry(
        g,
        k=prof.k,
        case=scheme.case,
        colors=count,
        claimed=scheme.claimed,
        src=res.value,
        member=member,
        checks=checks,
        verdict=_verdict(checks),
        certificates={"scheme": list(scheme.coloring.colors), "src": list(res.certificate.colors)},
    )


def validate_unicyclic(
    m_max: int = 10, *, budget: int | None = None, workers: int | None = None
) -> ValidationReport:
    """Unicyclic graphs with cycle length 3..5 and up to ``m_max`` edges (n = m <= 10)."""
    graphs = [g for n in range(3, m_max + 1) for g in unicyclic_graphs(n)]
    params = {"m_max": m_max, "budget": budget}
    return _run("unicyclic", params, graphs, partial(_check_unicyclic, budget=budget), workers)


CAMPAIGNS = {
    "theorem1": validate_theorem1,
    "theorem2": validate_theorem2,
    "lemma1": validate_lemma1,
    "corollary1": validate_corollary1,
    "proposition13": validate_proposition13,
    "observation1": validate_observation1,
    "fact1": validate_fact1,
    "unicyclic": validate_unicyclic,
}
