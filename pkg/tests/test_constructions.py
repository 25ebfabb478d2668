from __future__ import annotations

import math

import pytest
from hypothesis import given

from srclab.coloring import EdgeColoring, is_strongly_rainbow_connected
from srclab.constructions import (
    CLAIM2_VARIANTS,
    SchemeId,
    claim2_expected_colors,
    claim2_scheme_coloring,
    color_by_scheme,
    cycle_coloring,
    cycle_color_sequence,
    cycle_plus_fresh,
    triangle_packing_coloring,
    unicyclic_coloring,
    unicyclic_scheme,
)
from srclab.enumerate import enumerate_connected_graphs, unicyclic_graphs
from srclab.errors import Acyclic, ConstructionFailed, CycleTooLong, SchemeNotApplicable
from srclab.graph import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    emit_graph6,
    from_edge_list,
    path_graph,
)
from srclab.solver import exists_coloring, src_exact
from srclab.structure import (
    TrianglePacking,
    classify,
    make_packing,
    max_edge_disjoint_triangles,
    maximal_packings,
    pendant_profile,
)

from conftest import connected_graphs
from shapes import C3, C4, C5, EDGE, PATH2, attach

CLASS_LABELS = {"C5", "G1", "G2", "G3"}


class TestCycleColoring:
    def test_formulas(self):
        assert cycle_color_sequence(6) == [1, 2, 3, 1, 2, 3]
        assert cycle_color_sequence(7) == [1, 2, 3, 4, 1, 2, 3]
        assert cycle_color_sequence(5) == [1, 2, 3, 1, 2]

    def test_c5_verifies(self):
        c = cycle_coloring(5)
        assert c.colors == (1, 2, 3, 1, 2)
        assert is_strongly_rainbow_connected(c.graph, c)

    def test_triangle_uses_two_colors(self):
        assert cycle_coloring(3).color_count == 2

    @pytest.mark.parametrize("k", range(3, 16))
    def test_counts_and_validity(self, k):
        c = cycle_coloring(k)
        if k >= 4:
            assert c.color_count == math.ceil(k / 2)
        assert is_strongly_rainbow_connected(c.graph, c)


class TestCyclePlusFresh:
    def test_c6_pendant(self):
        g = from_edge_list(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])
        c = cycle_plus_fresh(g)
        assert c.color_count == 4 and is_strongly_rainbow_connected(g, c)

    def test_c7_three_pendants(self):
        g = from_edge_list(10, [(i, (i + 1) % 7) for i in range(7)] + [(0, 7), (2, 8), (4, 9)])
        c = cycle_plus_fresh(g)
        assert c.color_count == 7 == g.m - 3
        assert is_strongly_rainbow_connected(g, c)

    def test_c5_reduces_to_cycle_coloring(self):
        c = cycle_plus_fresh(cycle_graph(5))
        assert c.normalized() == EdgeColoring.of(cycle_graph(5), cycle_color_sequence(5)).normalized()

    def test_tree_rejected(self):
        with pytest.raises(Acyclic):
            cycle_plus_fresh(path_graph(4))

    def test_girth_at_least_6_always_verifies(self):
        for n in range(6, 10):
            for g in unicyclic_graphs(n):
                if pendant_profile(g).k >= 6:
                    assert is_strongly_rainbow_connected(g, cycle_plus_fresh(g))


class TestTrianglePacking:
    def test_bowtie(self):
        g = bowtie_graph()
        c = triangle_packing_coloring(g, max_edge_disjoint_triangles(g))
        assert c.color_count == 2 and is_strongly_rainbow_connected(g, c)

    def test_k4_one_triangle(self):
        g = complete_graph(4)
        c = triangle_packing_coloring(g, make_packing(g, [(0, 1, 2)]))
        assert c.color_count == 4 and is_strongly_rainbow_connected(g, c)

    def test_empty_packing(self):
        g = cycle_graph(6)
        c = triangle_packing_coloring(g, TrianglePacking(()))
        assert c.color_count == 6 and is_strongly_rainbow_connected(g, c)

    @given(connected_graphs(max_n=8))
    def test_every_maximal_packing(self, g):
        for p in maximal_packings(g, limit=50):
            c = triangle_packing_coloring(g, p)
            assert c.color_count == g.m - 2 * p.t
            assert is_strongly_rainbow_connected(g, c)


class TestUnicyclic:
    def test_g1_two_trees(self):
        g = attach(3, C3, [(0, PATH2), (1, EDGE)])
        c = unicyclic_coloring(g)
        assert c.color_count == g.m - 2 == src_exact(g).value

    def test_triangle_three_trees(self):
        g = attach(3, C3, [(0, EDGE), (1, EDGE), (2, PATH2)])
        assert unicyclic_coloring(g).color_count == g.m - 3

    def test_c4_adjacent_trees(self):
        g = attach(4, C4, [(0, EDGE), (1, PATH2)])
        scheme = unicyclic_scheme(g)
        assert scheme.coloring.color_count == g.m - 3
        assert is_strongly_rainbow_connected(g, scheme.coloring)

    def test_c5_one_tree(self):
        g = attach(5, C5, [(2, PATH2)])
        assert unicyclic_coloring(g).color_count == g.m - 3

    def test_c5_itself(self):
        scheme = unicyclic_scheme(cycle_graph(5))
        assert scheme.coloring.colors == (1, 2, 3, 1, 2)

    def test_c4_four_nontrivial_trees(self):
        g = attach(4, C4, [(v, EDGE) for v in range(4)])
        assert unicyclic_coloring(g).color_count == g.m - 3

    def test_c4_three_trees_one_trivial(self):
        g = attach(4, C4, [(0, EDGE), (1, PATH2), (2, EDGE)])
        c = unicyclic_coloring(g)
        assert c.color_count <= g.m - 3

    def test_long_cycle(self):
        g = attach(6, [(i, (i + 1) % 6) for i in range(6)], [(0, EDGE)])
        assert unicyclic_coloring(g).color_count == 4
        with pytest.raises(CycleTooLong):
            unicyclic_scheme(g, fallback=False)

    def test_members_need_m_minus_2(self):
        """On class members the scheme's m - 2 is optimal: no (m - 3)-coloring exists (m <= 12)."""
        seen = 0
        for n in range(3, 11):
            for g in unicyclic_graphs(n):
                if not classify(g) & CLASS_LABELS:
                    continue
                assert unicyclic_coloring(g).color_count == g.m - 2
                assert exists_coloring(g, g.m - 3) is None
                seen += 1

        def path(length):
            return [("r", 0)] + [(i - 1, i) for i in range(1, length)]

        # m = 11, 12: C4 with one long end-attached path; C3 with two long paths
        for g in (attach(4, C4, [(0, path(7))]), attach(4, C4, [(0, path(8))]),
                  attach(3, C3, [(0, path(4)), (1, path(4))]), attach(3, C3, [(0, path(5)), (1, path(4))])):
            assert classify(g) & CLASS_LABELS
            assert unicyclic_coloring(g).color_count == g.m - 2
            assert exists_coloring(g, g.m - 3) is None
            seen += 1
        assert seen > 50


class TestClaim2:
    def test_scheme_id_parse(self):
        assert SchemeId.parse("Claim2Config:2.2.1") == SchemeId("Claim2Config", "2.2.1")
        assert str(SchemeId.parse("TrianglePacking")) == "TrianglePacking"

    def test_two_triangles_not_long(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])
        with pytest.raises(SchemeNotApplicable):
            claim2_scheme_coloring(g, "2.1-long")

    def test_edge_disjoint_4_cycles(self):
        g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (2, 5), (5, 0)])
        c = claim2_scheme_coloring(g, "2.2.3")
        assert c.color_count == g.m - 4
        assert is_strongly_rainbow_connected(g, c)

    def test_triangle_and_pentagon(self):
        g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (4, 5), (5, 2)])
        c = claim2_scheme_coloring(g, "2.1-long")
        assert c.color_count == g.m - 3
        assert is_strongly_rainbow_connected(g, c)

    def test_two_pentagons(self):
        g = from_edge_list(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 1)])
        c = claim2_scheme_coloring(g, "2.3.1")
        assert c.color_count == g.m - 3 and is_strongly_rainbow_connected(g, c)

    def test_hexagon_with_opposite_triangles(self):
        hexagon = [(i, (i + 1) % 6) for i in range(6)]
        g = from_edge_list(8, hexagon + [(0, 6), (1, 6), (3, 7), (4, 7)])
        c = claim2_scheme_coloring(g, "thm2-2.1-l>=3")
        assert c.color_count == claim2_expected_colors(g, "thm2-2.1-l>=3")
        assert is_strongly_rainbow_connected(g, c)

    def test_figure_only_variants_are_rejected(self):
        with pytest.raises(SchemeNotApplicable):
            claim2_scheme_coloring(cycle_graph(5), "2.1-short")

    def test_every_applicable_graph_up_to_n7(self):
        applied = {v: 0 for v in CLAIM2_VARIANTS}
        for g in enumerate_connected_graphs(7, 10):
            src = None
            for v in CLAIM2_VARIANTS:
                try:
                    c = claim2_scheme_coloring(g, v)
                except SchemeNotApplicable:
                    continue
                except ConstructionFailed:  # pragma: no cover - would be a real finding
                    pytest.fail(f"{v} matched {emit_graph6(g)} but no labeling verified")
                src = src if src is not None else src_exact(g).value
                assert is_strongly_rainbow_connected(g, c)
                assert src <= c.color_count <= claim2_expected_colors(g, v)
                applied[v] += 1
        assert sum(applied.values()) > 20


class TestDispatch:
    def test_tags(self):
        c5 = cycle_graph(5)
        assert color_by_scheme(c5, "CycleChartrand").color_count == 3
        assert color_by_scheme(c5, "UnicyclicK5").color_count == 3
        assert color_by_scheme(bowtie_graph(), "TrianglePacking").color_count == 2
        with pytest.raises(SchemeNotApplicable):
            color_by_scheme(c5, "UnicyclicK4")
        with pytest.raises(SchemeNotApplicable):
            color_by_scheme(c5, "Claim2Config")
        with pytest.raises(SchemeNotApplicable):
            color_by_scheme(c5, "NoSuchScheme")


def test_unicyclic_against_oracle_m8():
    for n in range(3, 9):
        for g in unicyclic_graphs(n):
            scheme = unicyclic_scheme(g)
            src = src_exact(g).value
            assert is_strongly_rainbow_connected(g, scheme.coloring)
            assert scheme.coloring.color_count >= src
            if classify(g) & CLASS_LABELS:
                assert scheme.coloring.color_count == src == g.m - 2
