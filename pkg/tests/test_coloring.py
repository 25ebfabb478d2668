from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import rainbow_ok, set_partitions, strong_ok, strong_ok_by_simple_paths
from srclab.coloring import (
    EdgeColoring,
    Verdict,
    cut_edge_colors_distinct,
    has_rainbow_geodesic,
    is_rainbow_connected,
    is_rainbow_path,
    is_strongly_rainbow_connected,
)
from srclab.enumerate import enumerate_connected_graphs
from srclab.errors import ColoringMismatch, NotAPath
from srclab.graph import bowtie_graph, cycle_graph, from_edge_list, path_graph, star_graph

from conftest import colored_graphs


def col(g, *colors):
    return EdgeColoring.of(g, colors)


class TestEdgeColoring:
    def test_length_checked(self):
        with pytest.raises(ColoringMismatch):
            col(path_graph(3), 1)

    def test_counts_and_text(self):
        c = col(cycle_graph(5), 7, 9, 7, 42, 9)
        assert c.color_count == 3
        assert c.normalized().colors == (0, 1, 0, 2, 1)
        assert EdgeColoring.from_text(c.graph, c.to_text()) == c

    def test_verdict_witness_rules(self):
        assert Verdict(True)
        assert not Verdict(False, (0, 2))
        with pytest.raises(ValueError):
            Verdict(True, (0, 1))


class TestRainbowPath:
    def test_p3(self):
        p3 = path_graph(3)
        assert is_rainbow_path(col(p3, 1, 2), [0, 1, 2])
        assert not is_rainbow_path(col(p3, 1, 1), [0, 1, 2])

    def test_c5_prefix(self):
        c = col(cycle_graph(5), 1, 2, 3, 1, 2)
        assert is_rainbow_path(c, [0, 1, 2, 3])

    def test_not_a_path(self):
        with pytest.raises(NotAPath):
            is_rainbow_path(col(path_graph(3), 1, 2), [0, 2])


class TestGeodesics:
    def test_adjacent_always(self):
        c4 = cycle_graph(4)
        assert has_rainbow_geodesic(c4, col(c4, 1, 1, 1, 1), 0, 1)

    def test_c4_monochrome(self):
        c4 = cycle_graph(4)
        assert not has_rainbow_geodesic(c4, col(c4, 1, 1, 1, 1), 0, 2)

    def test_c4_alternating(self):
        c4 = cycle_graph(4)
        c = col(c4, 1, 2, 1, 2)
        assert has_rainbow_geodesic(c4, c, 0, 2)
        assert has_rainbow_geodesic(c4, c, 1, 3)


class TestStrong:
    def test_c5(self):
        c5 = cycle_graph(5)
        assert is_strongly_rainbow_connected(c5, col(c5, 1, 2, 3, 1, 2)).ok

    def test_tree_all_distinct(self):
        g = star_graph(4)
        assert is_strongly_rainbow_connected(g, col(g, 0, 1, 2, 3))

    def test_p3_witness_is_endpoints(self):
        p3 = path_graph(3)
        v = is_strongly_rainbow_connected(p3, col(p3, 1, 1))
        assert not v.ok and v.witness == (0, 2)

    def test_witness_is_lexicographically_first(self):
        c6 = cycle_graph(6)
        v = is_strongly_rainbow_connected(c6, col(c6, 1, 1, 1, 1, 1, 1))
        assert v.witness == (0, 2)

    def test_labels_need_not_be_contiguous(self):
        c5 = cycle_graph(5)
        assert is_strongly_rainbow_connected(c5, col(c5, 10, -4, 999, 10, -4))


class TestRainbow:
    def test_c4_alternating(self):
        c4 = cycle_graph(4)
        assert is_rainbow_connected(c4, col(c4, 1, 2, 1, 2))

    def test_c6_monochrome(self):
        c6 = cycle_graph(6)
        assert not is_rainbow_connected(c6, col(c6, *[1] * 6))

    def test_rainbow_but_not_strong(self):
        # triangle 1-2-3 with pendant 0-3: the only 0-1 geodesic repeats a color,
        # the detour 0-3-2-1 does not
        g = from_edge_list(4, [(1, 2), (0, 3), (1, 3), (2, 3)])
        c = col(g, 0, 1, 1, 2)
        assert rainbow_ok(g, c.colors) and not strong_ok(g, c.colors)
        assert is_rainbow_connected(g, c)
        assert is_strongly_rainbow_connected(g, c).witness == (0, 1)


class TestCutEdges:
    def test_p4(self):
        p4 = path_graph(4)
        assert cut_edge_colors_distinct(p4, col(p4, 1, 2, 3))
        assert not cut_edge_colors_distinct(p4, col(p4, 1, 2, 1))

    def test_bowtie_vacuous(self):
        b = bowtie_graph()
        assert cut_edge_colors_distinct(b, col(b, *[0] * 6))


def test_soundness_against_brute_force_small_graphs():
    """Every connected graph with m <= 7 and every coloring with at most 3 classes."""
    checked = 0
    for g in enumerate_connected_graphs(8, 7):
        for k in (1, 2, 3):
            for colors in set_partitions(g.m, k):
                c = EdgeColoring.of(g, colors)
                assert bool(is_strongly_rainbow_connected(g, c)) == strong_ok_by_simple_paths(g, colors)
                checked += 1
    assert checked > 10_000


@given(colored_graphs(max_n=6))
def test_strong_matches_networkx(gc):
    g, colors = gc
    assert bool(is_strongly_rainbow_connected(g, EdgeColoring.of(g, colors))) == strong_ok(g, colors)


@given(colored_graphs(max_n=6))
def test_rainbow_matches_networkx(gc):
    g, colors = gc
    assert bool(is_rainbow_connected(g, EdgeColoring.of(g, colors))) == rainbow_ok(g, colors)


@given(colored_graphs(max_n=7, max_colors=6))
def test_strong_implies_rainbow_and_bridge_separation(gc):
    g, colors = gc
    c = EdgeColoring.of(g, colors)
    if is_strongly_rainbow_connected(g, c):
        assert is_rainbow_connected(g, c)
        assert cut_edge_colors_distinct(g, c)


@given(colored_graphs(max_n=7, max_colors=5), st.data())
def test_refinement_is_monotone(gc, data):
    g, colors = gc
    c = EdgeColoring.of(g, colors)
    if not is_strongly_rainbow_connected(g, c):
        return
    # move some edges of one class into a brand new class
    victim = data.draw(st.sampled_from(sorted(set(colors))))
    members = [i for i, x in enumerate(colors) if x == victim]
    moved = data.draw(st.lists(st.sampled_from(members), unique=True, min_size=1))
    fresh = max(colors) + 1
    refined = [fresh if i in moved else x for i, x in enumerate(colors)]
    assert is_strongly_rainbow_connected(g, EdgeColoring.of(g, refined))


def test_observation1_over_enumeration():
    """Every strongly rainbow coloring (<= 3 classes, n <= 6, m <= 7) separates bridge colors."""
    for g in enumerate_connected_graphs(6, 7):
        for k in range(1, 4):
            for colors in set_partitions(g.m, k):
                c = EdgeColoring.of(g, colors)
                if is_strongly_rainbow_connected(g, c):
                    assert cut_edge_colors_distinct(g, c)
