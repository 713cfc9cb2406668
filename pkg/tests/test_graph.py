from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prodstruct.catalogue import are_isomorphic
from prodstruct.errors import PreconditionError
from prodstruct.graph import (
    Graph,
    Matching,
    VertexPartition,
    blocks,
    complete_graph,
    cone,
    connected_components,
    cycle_graph,
    is_forest,
    is_tree,
    path_graph,
    quotient_by_matching,
    quotient_by_partition,
    singleton_partition,
    strong_product,
)
from prodstruct.lowerbound import fan

from ._oracles import direct_strong_product_edges


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [e for e in possible if draw(st.booleans())]
    return Graph(n, edges)


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(PreconditionError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(PreconditionError):
            Graph(3, [(0, 3)])

    def test_edges_normalized_and_deduped(self):
        g = Graph(3, [(2, 0), (0, 2), (1, 2)])
        assert g.sorted_edges() == ((0, 2), (1, 2))

    def test_equality_ignores_labels(self):
        assert Graph(2, [(0, 1)], labels=("a", "b")) == Graph(2, [(0, 1)])

    def test_subgraph_reindexes(self):
        g = cycle_graph(5)
        sub, old = g.subgraph([1, 2, 4])
        assert old == (1, 2, 4)
        assert sub.sorted_edges() == ((0, 1),)  # only edge 1-2 survives

    def test_immutable(self):
        g = Graph(2)
        with pytest.raises(AttributeError):
            g.n = 5


class TestCompleteGraph:
    def test_k1(self):
        assert complete_graph(1) == Graph(1)

    def test_k2_single_edge(self):
        assert complete_graph(2).sorted_edges() == ((0, 1),)

    def test_k4_counts(self):
        g = complete_graph(4)
        assert (g.n, g.m) == (4, 6)

    def test_rejects_zero(self):
        with pytest.raises(PreconditionError):
            complete_graph(0)


class TestStrongProduct:
    def test_identity_factor(self):
        g = cycle_graph(5)
        assert are_isomorphic(strong_product(complete_graph(1), g), g)

    def test_p2_times_p2_is_k4(self):
        prod = strong_product(path_graph(2), path_graph(2))
        assert prod == complete_graph(4)

    def test_p3_times_p3_king_graph(self):
        prod = strong_product(path_graph(3), path_graph(3))
        assert (prod.n, prod.m) == (9, 20)

    def test_labels_record_coordinates(self):
        prod = strong_product(path_graph(2), path_graph(2))
        assert prod.labels == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")

    @given(small_graphs(max_n=5), small_graphs(max_n=5))
    @settings(max_examples=60, deadline=None)
    def test_edge_count_matches_direct_enumeration(self, a, b):
        assert strong_product(a, b).m == direct_strong_product_edges(a, b)

    def test_edge_count_exhaustive_up_to_5(self):
        from prodstruct.catalogue import graphs_up_to

        factors = graphs_up_to(5)
        for a in factors:
            for b in factors:
                assert strong_product(a, b).m == direct_strong_product_edges(a, b)

    @given(small_graphs(max_n=4), small_graphs(max_n=4))
    @settings(max_examples=40, deadline=None)
    def test_commutative_under_coordinate_swap(self, a, b):
        ab = strong_product(a, b)
        ba = strong_product(b, a)
        swapped = {
            (x * a.n + v, y * a.n + w)
            for (vx, wy) in ab.edges
            for v, x in [divmod(vx, b.n)]
            for w, y in [divmod(wy, b.n)]
        }
        assert {(min(e), max(e)) for e in swapped} == set(ba.edges)


class TestCone:
    def test_cone_of_nothing_is_k1(self):
        g, apex = cone(Graph(0))
        assert g == Graph(1) and apex == 0

    def test_cone_k2_is_k3(self):
        g, apex = cone(complete_graph(2))
        assert g == complete_graph(3) and apex == 2

    def test_cone_p4_is_fan5(self):
        g, _ = cone(path_graph(4))
        assert are_isomorphic(g, fan(5)[0])

    def test_counts(self):
        g, _ = cone(cycle_graph(6))
        assert (g.n, g.m) == (7, 12)


class TestQuotients:
    def test_matching_quotient_k3(self):
        q, vmap = quotient_by_matching(complete_graph(3), Matching([(0, 1)]))
        assert q == complete_graph(2)
        assert vmap.assignment == (0, 0, 1)

    def test_matching_quotient_c4_gives_triangle(self):
        q, _ = quotient_by_matching(cycle_graph(4), Matching([(0, 1)]))
        assert q == complete_graph(3)

    def test_matching_quotient_p4(self):
        q, _ = quotient_by_matching(path_graph(4), Matching([(0, 1), (2, 3)]))
        assert q == complete_graph(2)

    def test_rejects_non_matching(self):
        with pytest.raises(PreconditionError):
            quotient_by_matching(path_graph(3), Matching([(0, 2)]))
        with pytest.raises(PreconditionError):
            Matching([(0, 1), (1, 2)])

    def test_partition_quotient_c6_antipodal(self):
        g = cycle_graph(6)
        p = VertexPartition(g, [[0, 3], [1, 4], [2, 5]])
        q, _ = quotient_by_partition(g, p)
        assert q == complete_graph(3)

    def test_one_part_gives_k1(self):
        g = cycle_graph(4)
        q, _ = quotient_by_partition(g, VertexPartition(g, [[0, 1, 2, 3]]))
        assert q == Graph(1)

    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_singleton_partition_is_isomorphism(self, g):
        q, _ = quotient_by_partition(g, singleton_partition(g))
        assert are_isomorphic(q, g)

    def test_singleton_partition_exhaustive_up_to_7(self, graphs_to_7):
        for g in graphs_to_7:
            q, _ = quotient_by_partition(g, singleton_partition(g))
            assert are_isomorphic(q, g)

    def test_partition_validates(self):
        g = path_graph(3)
        with pytest.raises(PreconditionError):
            VertexPartition(g, [[0, 1]])  # misses 2
        with pytest.raises(PreconditionError):
            VertexPartition(g, [[0, 1], [1, 2]])  # overlap
        with pytest.raises(PreconditionError):
            VertexPartition(g, [[0, 1, 2], []])  # empty part


class TestRecognizers:
    def test_forest_and_tree(self):
        assert is_forest(path_graph(5))
        assert not is_forest(cycle_graph(3))
        assert is_tree(path_graph(4))
        assert not is_tree(Graph(3, [(0, 1)]))  # disconnected

    def test_components(self):
        g = Graph(5, [(0, 1), (2, 3)])
        assert connected_components(g) == [
            frozenset({0, 1}),
            frozenset({2, 3}),
            frozenset({4}),
        ]

    def test_blocks_two_triangles(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        blks, cuts = blocks(g)
        assert blks == [frozenset({0, 1, 2}), frozenset({2, 3, 4})]
        assert cuts == frozenset({2})

    def test_blocks_bridge_and_isolated(self):
        g = Graph(4, [(0, 1)])
        blks, cuts = blocks(g)
        assert blks == [frozenset({0, 1}), frozenset({2}), frozenset({3})]
        assert cuts == frozenset()

    def test_blocks_path(self):
        blks, cuts = blocks(path_graph(4))
        assert blks == [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})]
        assert cuts == frozenset({1, 2})
