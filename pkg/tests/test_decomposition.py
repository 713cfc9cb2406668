from __future__ import annotations

import random
from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prodstruct.decomposition import (
    PathDecomposition,
    TreeDecomposition,
    distension_path_decomposition,
    distension_tree_decomposition,
    exact_pathwidth,
    exact_treewidth,
    is_apex_forest,
    is_triangle_forest,
    validate_decomposition,
)
from prodstruct.errors import PreconditionError, TreewidthCapError
from prodstruct.generators import random_graph, random_triangle_forest
from prodstruct.graph import Graph, complete_graph, cycle_graph, path_graph
from prodstruct.lowerbound import distension, double_fan, fan

from ._oracles import brute_pathwidth, brute_treewidth, is_triangle_forest_by_cycles


class TestWidthAndValidate:
    def test_single_bag_width(self):
        d = TreeDecomposition(Graph(1), (frozenset({0, 1, 2, 3}),))
        assert d.width() == 3
        assert validate_decomposition(d, complete_graph(4)) is None

    def test_path_bags_of_p3(self):
        d = PathDecomposition((frozenset({0, 1}), frozenset({1, 2})))
        assert d.width() == 1
        assert validate_decomposition(d, path_graph(3)) is None

    def test_uncovered_edge_reported_first(self):
        d = TreeDecomposition(Graph(2, [(0, 1)]), (frozenset({0}), frozenset({1})))
        v = validate_decomposition(d, complete_graph(2))
        assert v is not None and v.kind == "edge-coverage" and "(0,1)" in v.detail

    def test_disconnected_trace_reported(self):
        d = PathDecomposition((frozenset({0}), frozenset({1}), frozenset({0})))
        v = validate_decomposition(d, Graph(2))
        assert v is not None and v.kind == "vertex-trace"

    def test_missing_vertex_reported(self):
        d = PathDecomposition((frozenset({0}),))
        v = validate_decomposition(d, Graph(2))
        assert v is not None and v.kind == "vertex-trace"

    def test_tree_must_be_tree(self):
        with pytest.raises(PreconditionError):
            TreeDecomposition(cycle_graph(3), (frozenset(),) * 3)
        with pytest.raises(PreconditionError):
            TreeDecomposition(Graph(2), (frozenset(), frozenset()))


class TestExactTreewidth:
    @pytest.mark.parametrize(
        "g, want",
        [
            (path_graph(6), 1),
            (complete_graph(4), 3),
            (fan(8)[0], 2),
            (fan(5)[0], 2),
            (double_fan(6)[0], 3),
            (cycle_graph(7), 2),
            (Graph(1), 0),
            (Graph(3), 0),
        ],
    )
    def test_known_values(self, g, want):
        tw, d = exact_treewidth(g)
        assert tw == want
        assert d.width() == tw
        assert validate_decomposition(d, g) is None

    def test_cap_refusal(self):
        with pytest.raises(TreewidthCapError):
            exact_treewidth(Graph(15))
        tw, _ = exact_treewidth(Graph(15, [(0, 1)]), max_vertices=15)
        assert tw == 1

    def test_matches_exhaustive_elimination_small(self, graphs_to_6):
        for g in graphs_to_6:
            tw, d = exact_treewidth(g)
            assert tw == brute_treewidth(g)
            assert d.width() == tw
            assert validate_decomposition(d, g) is None

    def test_matches_exhaustive_elimination_7_8(self):
        rng = random.Random(17)
        for n in (7, 8):
            for _ in range(4):
                g = random_graph(n, rng.uniform(0.25, 0.7), rng)
                assert exact_treewidth(g)[0] == brute_treewidth(g)


class TestExactPathwidth:
    @pytest.mark.parametrize(
        "g, want",
        [
            (path_graph(6), 1),
            (complete_graph(5), 4),
            (cycle_graph(6), 2),
            (fan(8)[0], 2),
        ],
    )
    def test_known_values(self, g, want):
        pw, d = exact_pathwidth(g)
        assert pw == want
        assert d.width() == pw
        assert validate_decomposition(d, g) is None

    def test_matches_exhaustive_small(self, graphs_to_6):
        for g in islice(graphs_to_6, 0, len(graphs_to_6), 3):
            pw, d = exact_pathwidth(g)
            assert pw == brute_pathwidth(g)
            assert validate_decomposition(d, g) is None

    def test_tw_le_pw(self, graphs_to_6):
        for g in graphs_to_6:
            assert exact_treewidth(g)[0] <= exact_pathwidth(g)[0]


class TestRecognizers:
    def test_apex_forest(self):
        assert is_apex_forest(path_graph(5)) == frozenset()
        f, centre = fan(7)
        assert is_apex_forest(f) == frozenset({centre})
        assert is_apex_forest(complete_graph(4)) is None

    def test_triangle_forest_examples(self):
        assert is_triangle_forest(path_graph(5))
        assert not is_triangle_forest(cycle_graph(4))
        two_tri = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (0, 6)])
        assert is_triangle_forest(two_tri)

    def test_triangle_forest_vs_cycle_enumeration(self, graphs_to_7):
        for g in graphs_to_7:
            assert is_triangle_forest(g) == is_triangle_forest_by_cycles(g)

    def test_random_glued_blocks_are_triangle_forests(self):
        rng = random.Random(8)
        for _ in range(50):
            assert is_triangle_forest(random_triangle_forest(30, rng))


class TestDistensionDecompositions:
    def test_k2_t1_single_new_bag(self):
        g = complete_graph(2)
        d = distension(g, 1)
        base = TreeDecomposition(Graph(1), (frozenset({0, 1}),))
        out = distension_tree_decomposition(g, base, d)
        assert validate_decomposition(out, d.graph) is None
        assert out.width() == 2

    def test_k2_t3_path_bound(self):
        g = complete_graph(2)
        d = distension(g, 3)
        base = PathDecomposition((frozenset({0, 1}),))
        out = distension_path_decomposition(g, base, d)
        assert validate_decomposition(out, d.graph) is None
        assert out.width() <= 3

    def test_rejects_mismatched_base(self):
        d = distension(complete_graph(2), 2)
        base = TreeDecomposition(Graph(1), (frozenset({0, 1, 2}),))
        with pytest.raises(PreconditionError):
            distension_tree_decomposition(complete_graph(3), base, d)

    def test_rejects_invalid_decomposition(self):
        g = complete_graph(3)
        d = distension(g, 1)
        bad = TreeDecomposition(Graph(1), (frozenset({0, 1}),))
        with pytest.raises(PreconditionError):
            distension_tree_decomposition(g, bad, d)

    @given(st.integers(min_value=0, max_value=2**28 - 1), st.integers(min_value=1, max_value=4))
    @settings(max_examples=80, deadline=None)
    def test_random_tree_bound(self, bits, t):
        edges = [(u, v) for k, (u, v) in enumerate(
            ((u, v) for u in range(8) for v in range(u + 1, 8))
        ) if (bits >> k) & 1]
        g = Graph(8, edges)
        d = distension(g, t)
        tw, td = exact_treewidth(g)
        out = distension_tree_decomposition(g, td, d)
        assert validate_decomposition(out, d.graph) is None
        assert out.width() <= max(tw, 3)

    @given(st.integers(min_value=0, max_value=2**28 - 1), st.integers(min_value=1, max_value=4))
    @settings(max_examples=80, deadline=None)
    def test_random_path_bound(self, bits, t):
        edges = [(u, v) for k, (u, v) in enumerate(
            ((u, v) for u in range(8) for v in range(u + 1, 8))
        ) if (bits >> k) & 1]
        g = Graph(8, edges)
        d = distension(g, t)
        pw, pd = exact_pathwidth(g)
        out = distension_path_decomposition(g, pd, d)
        assert validate_decomposition(out, d.graph) is None
        assert out.width() <= pw + 2

    def test_fan_tower_widths(self):
        # two rounds of distension keep treewidth <= 3 and pathwidth <= 6
        f, _ = fan(10)
        from prodstruct.lowerbound import fan_path_decomposition, fan_tree_decomposition

        td_f = fan_tree_decomposition(10)
        pd_f = fan_path_decomposition(10)
        assert td_f.width() == 2 and pd_f.width() == 2
        first = distension(f, 9)
        td_j = distension_tree_decomposition(f, td_f, first)
        pd_j = distension_path_decomposition(f, pd_f, first)
        assert td_j.width() <= 3 and pd_j.width() <= 4
        second = distension(first.graph, 9)
        td_g = distension_tree_decomposition(first.graph, td_j, second)
        pd_g = distension_path_decomposition(first.graph, pd_j, second)
        assert validate_decomposition(td_g, second.graph) is None
        assert validate_decomposition(pd_g, second.graph) is None
        assert td_g.width() <= 3
        assert pd_g.width() <= 6
