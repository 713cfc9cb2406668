from __future__ import annotations

import random

import pytest

from prodstruct.decomposition import is_triangle_forest
from prodstruct.errors import PreconditionError
from prodstruct.generators import dodecahedron, octahedron, random_triangle_forest
from prodstruct.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    is_forest,
    path_graph,
    quotient_by_matching,
)
from prodstruct.partition import (
    contractible_matching,
    planar_contractible_matching,
    two_triangle_forest_partition,
)

from ._oracles import is_triangle_forest_by_cycles


class TestTwoTriangleForestPartition:
    def test_forest_single_part(self):
        g = path_graph(6)
        p = two_triangle_forest_partition(g)
        assert len(p.parts) == 1 and p.parts[0] == frozenset(range(6))

    def test_k4(self):
        p = two_triangle_forest_partition(complete_graph(4))
        for part in p.parts:
            sub, _ = complete_graph(4).subgraph(part)
            assert is_triangle_forest(sub)

    def test_octahedron_exhaustive_feasibility(self):
        g = octahedron()
        feasible = []
        for bits in range(1 << 6):
            side0 = [v for v in range(6) if not (bits >> v) & 1]
            side1 = [v for v in range(6) if (bits >> v) & 1]
            subs = [g.subgraph(s)[0] for s in (side0, side1) if s]
            if all(is_triangle_forest_by_cycles(s) for s in subs):
                feasible.append(bits)
        assert feasible, "oracle says no valid split exists"
        p = two_triangle_forest_partition(g)
        for part in p.parts:
            assert is_triangle_forest_by_cycles(g.subgraph(part)[0])

    def test_rejects_nonplanar(self):
        with pytest.raises(PreconditionError):
            two_triangle_forest_partition(complete_graph(5))

    def test_deterministic(self):
        g = dodecahedron()
        assert two_triangle_forest_partition(g) == two_triangle_forest_partition(g)


class TestContractibleMatching:
    def test_forest_empty(self):
        assert len(contractible_matching(path_graph(5))) == 0

    def test_triangle_one_edge(self):
        m = contractible_matching(complete_graph(3))
        assert sorted(m.edges) == [(0, 1)]
        q, _ = quotient_by_matching(complete_graph(3), m)
        assert q == complete_graph(2)

    def test_triangle_chain_golden(self):
        chain = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
        m = contractible_matching(chain)
        assert sorted(m.edges) == [(0, 1), (2, 3), (4, 5)]
        q, _ = quotient_by_matching(chain, m)
        assert is_forest(q) and q.n == 4

    def test_rejects_non_triangle_forest(self):
        with pytest.raises(PreconditionError):
            contractible_matching(cycle_graph(4))

    def test_thousand_random_triangle_forests(self):
        rng = random.Random(12345)
        for _ in range(1000):
            g = random_triangle_forest(rng.randrange(2, 41), rng)
            m = contractible_matching(g)
            q, _ = quotient_by_matching(g, m)
            assert is_forest(q)

    def test_disconnected(self):
        # two triangles, separate components
        g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        m = contractible_matching(g)
        q, _ = quotient_by_matching(g, m)
        assert is_forest(q)
        assert len(m) == 2


class TestPlanarContractibleMatching:
    def test_tree_trivial(self):
        m, split = planar_contractible_matching(path_graph(5))
        assert len(m) == 0
        assert len(split.parts) == 1

    def test_k4(self):
        g = complete_graph(4)
        m, split = planar_contractible_matching(g)
        for part in split.parts:
            side, _ = split.host.subgraph(part)
            assert is_forest(side)

    def test_dodecahedron_postconditions(self):
        g = dodecahedron()
        m, split = planar_contractible_matching(g)
        m.check_against(g)
        assert len(m) <= g.n // 2
        quotient = split.host
        q2, _ = quotient_by_matching(g, m)
        assert quotient == q2
        for part in split.parts:
            side, _ = quotient.subgraph(part)
            assert is_forest(side)

    def test_small_planar_catalogue(self, planar_all_by_n):
        for n in range(1, 7):
            for g in planar_all_by_n[n]:
                m, split = planar_contractible_matching(g)
                assert len(m) <= g.n // 2
                for part in split.parts:
                    side, _ = split.host.subgraph(part)
                    assert is_forest(side)
