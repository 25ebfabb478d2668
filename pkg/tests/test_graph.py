from __future__ import annotations

import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_bridges, brute_isomorphic, nx_graph
from srclab.errors import Disconnected, LoopEdge, MalformedGraph6, TooLarge, VertexOutOfRange
from srclab.graph import (
    Graph,
    blocks,
    bowtie_graph,
    bridges,
    canonical_form,
    canonical_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    cycles_of_length,
    diameter,
    distances,
    emit_graph6,
    from_edge_list,
    girth,
    is_connected,
    iter_cycles,
    parse_graph6,
    path_graph,
    petersen_graph,
    read_graph6_lines,
    relabel,
    shortest_path_dag,
    smallest_two_cycles,
    star_graph,
)
from srclab.enumerate import enumerate_connected_graphs

from conftest import connected_graphs


class TestConstruction:
    def test_triangle(self):
        g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        assert g.m == 3 and girth(g) == 3

    def test_cycle_keeps_input_order(self):
        g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        assert g.m == 5
        assert g.edges[4] == (0, 4)
        assert g.edge_id(4, 0) == 4

    def test_duplicates_collapse(self):
        assert from_edge_list(4, [(0, 1), (0, 1)]).m == 1
        assert from_edge_list(4, [(0, 1), (1, 0)]).m == 1

    def test_errors(self):
        with pytest.raises(LoopEdge):
            from_edge_list(3, [(1, 1)])
        with pytest.raises(VertexOutOfRange):
            from_edge_list(3, [(0, 3)])

    def test_immutable(self):
        g = path_graph(3)
        with pytest.raises(AttributeError):
            g.n = 4

    def test_incident_and_degree(self):
        g = star_graph(3)
        assert g.degree(0) == 3
        assert g.incident(0) == [0, 1, 2]


class TestGraph6:
    def test_known_strings(self):
        assert parse_graph6("A_").edges == ((0, 1),)
        p3 = parse_graph6("BW")
        assert p3.n == 3 and p3.m == 2
        assert nx.is_isomorphic(nx_graph(p3), nx.path_graph(3))

    def test_round_trip_stock_strings(self):
        for s in ["D?{", "A_", "BW", "C~", "Dhc", "IheA@GUAo", "E{Sw"]:
            assert emit_graph6(parse_graph6(s)) == s

    def test_against_networkx_decoder(self):
        for g in enumerate_connected_graphs(6, 9):
            s = emit_graph6(g)
            theirs = nx.from_graph6_bytes(s.encode())
            assert {frozenset(e) for e in theirs.edges()} == {frozenset(e) for e in g.edges}
            assert nx.to_graph6_bytes(nx_graph(g), header=False).decode().strip() == s

    @given(connected_graphs(max_n=9))
    def test_round_trip_edge_set(self, g):
        back = parse_graph6(emit_graph6(g))
        assert back.n == g.n
        assert set(back.edges) == set(g.edges)

    def test_header_and_comments(self):
        got = list(read_graph6_lines(["# stock", "", ">>graph6<<Dhc", "A_"]))
        assert [emit_graph6(g) for g in got] == ["Dhc", "A_"]

    @pytest.mark.parametrize("bad", ["", "A", "A~", "B\x7f", "zz"])
    def test_malformed(self, bad):
        with pytest.raises(MalformedGraph6):
            parse_graph6(bad)


class TestMetrics:
    def test_c5(self):
        c5 = cycle_graph(5)
        for s in range(5):
            assert sorted(distances(c5, s)) == [0, 1, 1, 2, 2]
        assert diameter(c5) == 2

    def test_p6(self):
        assert diameter(path_graph(6)) == 5

    @pytest.mark.parametrize("a", range(1, 6))
    def test_c4_with_end_attached_path(self, a):
        edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
        prev = 0
        for v in range(4, 4 + a):
            edges.append((prev, v))
            prev = v
        g = from_edge_list(4 + a, edges)
        assert diameter(g) == a + 2 == g.m - 2
        assert diameter(g) == nx.diameter(nx_graph(g))

    def test_disconnected_is_error(self):
        with pytest.raises(Disconnected):
            diameter(from_edge_list(4, [(0, 1), (2, 3)]))

    @given(connected_graphs(max_n=8))
    def test_distances_match_networkx(self, g):
        h = nx_graph(g)
        for s in range(g.n):
            want = nx.single_source_shortest_path_length(h, s)
            assert distances(g, s) == [want[v] for v in range(g.n)]


class TestGirthAndCycles:
    def test_examples(self):
        assert girth(complete_graph(4)) == 3
        assert girth(petersen_graph()) == 5
        assert girth(path_graph(5)) is None
        assert girth(star_graph(4)) is None

    @given(connected_graphs(max_n=7))
    def test_girth_matches_networkx_cycle_basis(self, g):
        h = nx_graph(g)
        want = nx.girth(h)
        assert girth(g) == (None if want == float("inf") else want)
        assert (girth(g) is None) == (g.m == g.n - 1)

    @given(connected_graphs(max_n=6))
    def test_cycle_enumeration_matches_networkx(self, g):
        ours = {frozenset(c.edges) for c in iter_cycles(g)}
        h = nx_graph(g)
        theirs = set()
        for cyc in nx.simple_cycles(h):
            if len(cyc) >= 3:
                theirs.add(frozenset(g.edge_id(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])))
        assert ours == theirs

    def test_smallest_two_cycles(self):
        assert smallest_two_cycles(cycle_graph(6)) is None
        c1, c2 = smallest_two_cycles(bowtie_graph())
        assert len(c1) == len(c2) == 3
        c1, c2 = smallest_two_cycles(complete_graph(4))
        assert len(c1) == len(c2) == 3
        assert len(set(c1.edges) & set(c2.edges)) == 1
        # tie-break: lexicographically smallest sorted edge-id tuples
        all_tris = sorted(c.edges for c in cycles_of_length(complete_graph(4), 3))
        assert (c1.edges, c2.edges) == (all_tris[0], all_tris[1])


class TestShortestPathDag:
    def test_c4_antipode(self):
        dag = shortest_path_dag(cycle_graph(4), 0)
        assert len(dag.parents[2]) == 2
        assert len(list(dag.geodesics(2))) == 2

    def test_tree_single_parents(self):
        dag = shortest_path_dag(star_graph(4), 2)
        assert all(len(dag.parents[v]) == 1 for v in range(5) if v != 2)

    def test_k23(self):
        g = complete_bipartite(2, 3)
        paths = list(shortest_path_dag(g, 0).geodesics(1))
        assert len(paths) == 3 and all(len(p) == 3 for p in paths)

    @given(connected_graphs(max_n=7))
    def test_geodesics_match_networkx(self, g):
        h = nx_graph(g)
        for s in range(g.n):
            dag = shortest_path_dag(g, s)
            for v in range(g.n):
                if v == s:
                    continue
                ours = sorted(tuple(p) for p in dag.geodesics(v))
                theirs = sorted(tuple(p) for p in nx.all_shortest_paths(h, s, v))
                assert ours == theirs
                assert all(len(p) - 1 == dag.dist[v] for p in ours)
                for w in range(g.n):
                    for p in dag.parents[w]:
                        assert dag.dist[w] == dag.dist[p] + 1 and g.has_edge(p, w)


class TestBlocks:
    def test_bowtie(self):
        b = blocks(bowtie_graph())
        assert len(b.blocks) == 2 and all(len(x) == 3 for x in b.blocks)
        assert b.cut_vertices == frozenset({2})
        assert not b.bridges

    def test_p4(self):
        b = blocks(path_graph(4))
        assert len(b.blocks) == 3 and len(b.bridges) == 3

    def test_k4_with_pendant(self):
        g = from_edge_list(5, list(complete_graph(4).edges) + [(3, 4)])
        b = blocks(g)
        assert sorted(len(x) for x in b.blocks) == [1, 6]
        assert b.bridges == frozenset({6})

    @given(connected_graphs(max_n=7))
    def test_partition_and_bridges(self, g):
        b = blocks(g)
        seen = [e for block in b.blocks for e in block]
        assert sorted(seen) == list(range(g.m))
        assert b.bridges == frozenset(e for block in b.blocks if len(block) == 1 for e in block)
        assert set(bridges(g)) == brute_bridges(g)
        h = nx_graph(g)
        assert set(b.cut_vertices) == set(nx.articulation_points(h))
        theirs = sorted(sorted(g.edge_id(u, v) for u, v in comp) for comp in nx.biconnected_component_edges(h))
        assert sorted(sorted(x) for x in b.blocks) == theirs


class TestCanonicalForm:
    def test_c5_relabelings(self):
        c5 = cycle_graph(5)
        keys = {canonical_form(relabel(c5, p)) for p in permutations(range(5))}
        assert len(keys) == 1

    def test_p4_vs_star(self):
        assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))

    def test_too_large(self):
        with pytest.raises(TooLarge):
            canonical_form(path_graph(11))

    @given(connected_graphs(max_n=8), st.randoms(use_true_random=False))
    def test_invariant_under_relabeling(self, g, rnd):
        order = list(range(g.n))
        rnd.shuffle(order)
        h = relabel(g, order)
        assert canonical_form(h) == canonical_form(g)
        assert brute_isomorphic(canonical_graph(g), g)

    def test_agrees_with_brute_force_isomorphism_n6(self):
        reps = list(enumerate_connected_graphs(6))
        rng = random.Random(7)
        # distinct keys are pairwise non-isomorphic (checked against networkx)
        by_sig: dict = {}
        for g in reps:
            sig = (g.n, g.m, tuple(sorted(g.degrees)))
            by_sig.setdefault(sig, []).append(g)
        for group in by_sig.values():
            for i, a in enumerate(group):
                for b in group[i + 1:]:
                    assert not nx.is_isomorphic(nx_graph(a), nx_graph(b))
        # equal keys for random relabelings, verified isomorphic by brute force
        for g in reps:
            order = list(range(g.n))
            rng.shuffle(order)
            h = relabel(g, order)
            assert canonical_form(h) == canonical_form(g)
            assert brute_isomorphic(g, h)

    def test_twin_heavy_graphs(self):
        for g in (complete_bipartite(3, 4), complete_graph(7), star_graph(8), petersen_graph()):
            order = list(range(g.n))[::-1]
            assert canonical_form(relabel(g, order)) == canonical_form(g)


def test_is_connected():
    assert is_connected(path_graph(4))
    assert not is_connected(Graph(3, ((0, 1),)))
