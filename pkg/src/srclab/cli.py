"""Command-line front end.

JSON goes to stdout, a short human summary to stderr. Exit codes: 0 ok or
confirmed, 1 counterexample or failed verification, 2 usage or input error,
3 solver budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .campaigns import CAMPAIGNS
from .coloring import EdgeColoring, is_rainbow_connected, is_strongly_rainbow_connected
from .constructions import color_by_scheme
from .enumerate import enumerate_connected_graphs
from .errors import BudgetExceeded, GirthOutOfRange, SrcLabError
from .graph import Graph, emit_graph6, girth, read_graph6_lines
from .solver import rc_exact, src_exact
from .structure import classify, d2_tree, gbar_t, is_cubic, lemma1_configuration, line_graph, max_edge_disjoint_triangles, star_cliques

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _read_graphs(path: str | None) -> list[Graph]:
    try:
        if path in (None, "-"):
            lines = sys.stdin.read().splitlines()
        else:
            with open(path) as fh:
                lines = fh.read().splitlines()
    except OSError as exc:
        raise _UsageError(str(exc)) from None
    graphs = list(read_graph6_lines(lines))
    if not graphs:
        raise _UsageError("no graphs in input")
    return graphs


def _emit(obj) -> None:
    print(json.dumps(obj))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_solve(args) -> int:
    solve = src_exact if args.mode == "src" else rc_exact
    code = EXIT_OK
    for g in _read_graphs(args.input):
        try:
            res = solve(g, args.budget)
        except BudgetExceeded as exc:
            _emit({
                "graph6": emit_graph6(g),
                "value": None,
                "upper_bound": exc.upper_bound,
                "certificate": list(exc.certificate.colors) if exc.certificate else None,
                "examined": exc.examined,
            })
            _note(f"{emit_graph6(g)}: budget exceeded, {args.mode} <= {exc.upper_bound}")
            code = EXIT_BUDGET
            continue
        out = {"graph6": emit_graph6(g), "value": res.value}
        if args.emit_certificate:
            out["certificate"] = list(res.certificate.colors)
        out["examined"] = res.stats.examined
        out["ms"] = round(res.stats.elapsed_ms, 3)
        _emit(out)
        _note(f"{emit_graph6(g)}: {args.mode} = {res.value}")
    return code


def _read_coloring(args, g: Graph) -> EdgeColoring:
    text = args.coloring
    if args.coloring_file:
        with open(args.coloring_file) as fh:
            text = fh.read()
    if text is None:
        raise _UsageError("give --coloring or --coloring-file")
    try:
        return EdgeColoring.from_text(g, text)
    except ValueError as exc:
        raise _UsageError(f"bad coloring: {exc}") from None


def _cmd_verify(args) -> int:
    graphs = _read_graphs(args.input)
    if len(graphs) != 1:
        raise _UsageError("verify takes exactly one graph")
    g = graphs[0]
    c = _read_coloring(args, g)
    check = is_strongly_rainbow_connected if args.mode == "src" else is_rainbow_connected
    verdict = check(g, c)
    _emit({"graph6": emit_graph6(g), "mode": args.mode, "ok": verdict.ok,
           "witness": list(verdict.witness) if verdict.witness else None, "colors": c.color_count})
    _note("ok" if verdict.ok else f"no rainbow {'geodesic' if args.mode == 'src' else 'path'} between {verdict.witness}")
    return EXIT_OK if verdict.ok else EXIT_COUNTEREXAMPLE


def _cmd_color(args) -> int:
    code = EXIT_OK
    for g in _read_graphs(args.input):
        c = color_by_scheme(g, args.scheme)
        verdict = is_strongly_rainbow_connected(g, c)
        _emit({"graph6": emit_graph6(g), "scheme": args.scheme, "coloring": c.to_text(),
               "colors": c.color_count, "ok": verdict.ok,
               "witness": list(verdict.witness) if verdict.witness else None})
        _note(f"{emit_graph6(g)}: {c.color_count} colors, {'verified' if verdict.ok else 'NOT strongly rainbow'}")
        if not verdict.ok:
            code = EXIT_COUNTEREXAMPLE
    return code


def _cmd_classify(args) -> int:
    for g in _read_graphs(args.input):
        labels = classify(g)
        out = {"graph6": emit_graph6(g), "labels": sorted(labels), "girth": girth(g),
               "t_max": max_edge_disjoint_triangles(g).t}
        try:
            out["lemma1_pattern"] = lemma1_configuration(g).pattern.value
        except GirthOutOfRange:
            pass
        if gbar_t(labels) is not None:
            out["d2_tree_graph6"] = emit_graph6(d2_tree(g))
        _emit(out)
        _note(f"{emit_graph6(g)}: {', '.join(sorted(labels))}")
    return EXIT_OK


def _cmd_linegraph(args) -> int:
    for g in _read_graphs(args.input):
        lg = line_graph(g)
        out = {"graph6": emit_graph6(g), "line_graph6": emit_graph6(lg), "n": lg.n, "m": lg.m}
        if is_cubic(g):
            out["star_cliques"] = [sorted(c) for c in star_cliques(g)]
        _emit(out)
        _note(f"{emit_graph6(g)}: line graph has {lg.n} vertices, {lg.m} edges")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    count = 0
    for g in enumerate_connected_graphs(args.n_max, args.m_max):
        print(emit_graph6(g))
        count += 1
    _note(f"{count} connected graphs with n <= {args.n_max}" + (f", m <= {args.m_max}" if args.m_max is not None else ""))
    return EXIT_OK


def _cmd_validate(args) -> int:
    fn = CAMPAIGNS[args.campaign]
    kwargs: dict = {"workers": args.workers}
    if args.campaign == "unicyclic":
        kwargs["m_max"] = args.m_max if args.m_max is not None else 10
    elif args.campaign == "corollary1":
        kwargs["source"] = args.input
    else:
        if args.n_max is not None:
            kwargs["n_max"] = args.n_max
        if args.m_max is not None:
            kwargs["m_max"] = args.m_max
        if args.input:
            kwargs["source"] = args.input
    if args.campaign in ("theorem1", "theorem2", "proposition13", "observation1", "corollary1", "unicyclic"):
        kwargs["budget"] = args.budget
    if args.campaign == "theorem1":
        kwargs["path_rule"] = args.path_rule
    if args.campaign == "lemma1":
        kwargs["all_pairs"] = args.all_pairs
    report = fn(**kwargs)
    text = report.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    s = report.summary
    _note(f"{report.campaign}: {s['graphs']} graphs, {s['confirmations']} confirmed, "
          f"{s['counterexamples']} counterexamples, {s['budget_exceeded']} skipped (budget)")
    if not report.ok:
        return EXIT_COUNTEREXAMPLE
    return EXIT_BUDGET if report.skipped else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srclab", description="Strong rainbow connection toolkit for small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, help_text="graph6 file, one graph per line ('-' or omitted: stdin)"):
        p.add_argument("--input", "-i", default=None, help=help_text)

    p = sub.add_parser("solve", help="exact src or rc with a certificate")
    p.add_argument("--mode", choices=("src", "rc"), default="src")
    add_input(p)
    p.add_argument("--budget", type=int, default=None, help="max colorings examined (default: SRC_LAB_BUDGET or 2e8)")
    p.add_argument("--emit-certificate", action="store_true", help="include the optimal coloring in the output")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a coloring given as whitespace-separated colors per edge id")
    p.add_argument("--mode", choices=("src", "rc"), default="src")
    add_input(p)
    p.add_argument("--coloring", default=None, help="colors in edge-id order, e.g. '0 1 2 0 1'")
    p.add_argument("--coloring-file", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("color", help="color by a named construction and verify it")
    p.add_argument("--scheme", required=True, help="CycleChartrand, CyclePlusFresh, TrianglePacking, "
                   "UnicyclicK3/K4/K5 or Claim2Config:<variant>")
    add_input(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("classify", help="structural labels, girth, triangle packing number")
    add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("linegraph", help="line graph (and star cliques for cubic graphs)")
    add_input(p)
    p.set_defaults(func=_cmd_linegraph)

    p = sub.add_parser("enumerate", help="connected graphs up to isomorphism, as graph6")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-max", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("validate", help="run a validation campaign and print its JSON report")
    p.add_argument("campaign", choices=sorted(CAMPAIGNS))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    add_input(p, "graph6 file to use instead of the built-in enumeration")
    p.add_argument("--workers", type=int, default=None, help="process pool size (results stay in input order)")
    p.add_argument("--output", "-o", default=None, help="write the JSON report here instead of stdout")
    p.add_argument("--csv", default=None, help="also write a per-graph CSV summary")
    p.add_argument("--path-rule", choices=("endpoint", "any"), default="endpoint",
                   help="theorem1 only: when a pendant tree counts as a path")
    p.add_argument("--all-pairs", action="store_true", help="lemma1 only: check every admissible cycle pair")
    p.set_defaults(func=_cmd_validate)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        _note(f"error: {exc}")
        return EXIT_BUDGET
    except (SrcLabError, ValueError, OSError) as exc:
        _note(f"error: {type(exc).__name__}: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
