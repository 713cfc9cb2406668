"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`. Everything is exact or
oracle-checked; tolerances are structural (widths, caps, validity), so every
assertion is all-or-nothing at the stated scale.
"""

from __future__ import annotations

import json
import random

from prodstruct.decomposition import (
    distension_path_decomposition,
    distension_tree_decomposition,
    exact_pathwidth,
    exact_treewidth,
    is_apex_forest,
    is_triangle_forest,
    validate_decomposition,
)
from prodstruct.embedding import (
    apex_product_structure,
    embedding_to_partitions,
    k_apex_product_structure,
    partitions_to_embedding,
    validate_embedding,
)
from prodstruct.generators import (
    all_partitions,
    icosahedron,
    random_admissible_pair,
    random_double_fan_pair,
    random_graph,
    random_triangle_forest,
    random_two_apex_graph,
)
from prodstruct.graph import (
    VertexMap,
    complete_graph,
    is_forest,
    quotient_by_matching,
    quotient_by_partition,
)
from prodstruct.io import format_edge_list
from prodstruct.lowerbound import (
    distension,
    double_fan,
    double_fan_rainbow_k4,
    fan,
    fan_path_decomposition,
    fan_tree_decomposition,
    fan_two_parts_witness,
    find_rainbow_k4,
    four_cliques,
    intersection_cap_violation,
    is_tree_partition,
    rainbow_k4_oracle,
)
from prodstruct.partition import contractible_matching, two_triangle_forest_partition
from prodstruct.planarity import is_planar

from ._oracles import is_triangle_forest_by_cycles


def report(num: int, ok: bool, message: str) -> None:
    print(f"ACCEPTANCE {num:02d}: {'PASS' if ok else 'FAIL'} - {message}")
    assert ok, f"criterion {num} failed: {message}"


def _hosts_certified(e) -> bool:
    for host in (e.host1, e.host2):
        if is_apex_forest(host) is None:
            return False
        if exact_treewidth(host)[0] > 2:
            return False
    return True


def test_criterion_01_planar_catalogue(planar_connected_by_n):
    checked = 0
    for n in range(1, 9):
        for g in planar_connected_by_n[n]:
            e = apex_product_structure(g)
            assert validate_embedding(e) is None
            assert _hosts_certified(e)
            assert e.host1.n + e.host2.n <= g.n + 2
            assert e.c == 2
            checked += 1
    report(1, checked == 6749, f"{checked} connected planar graphs <= 8 vertices embedded and certified")


def test_criterion_02_beyond_planarity():
    count = 0
    for g in (complete_graph(5), complete_graph(6)):
        e = apex_product_structure(g)
        assert validate_embedding(e) is None and _hosts_certified(e)
        count += 1
    rng = random.Random(20250810)
    for _ in range(50):
        g = random_two_apex_graph(rng.randrange(3, 13), rng)
        e = apex_product_structure(g)
        assert validate_embedding(e) is None and _hosts_certified(e)
        count += 1
    e = k_apex_product_structure(complete_graph(7), 3)
    assert validate_embedding(e) is None and e.c == 3
    assert is_apex_forest(e.host1) is not None and is_apex_forest(e.host2) is not None
    count += 1
    report(2, count == 53, "K5, K6, 50 random 2-apex graphs, and K7 at k=3 all embed validly")


def test_criterion_03_contractible_matchings():
    rng = random.Random(3141)
    for _ in range(1000):
        g = random_triangle_forest(rng.randrange(2, 41), rng)
        m = contractible_matching(g)
        m.check_against(g)
        q, _ = quotient_by_matching(g, m)
        assert is_forest(q)
    report(3, True, "1000 random block-glued triangle-forests contract to forests")


def test_criterion_04_triangle_forest_partitions(planar_all_by_n):
    checked = 0
    for n in range(1, 9):
        for g in planar_all_by_n[n]:
            p = two_triangle_forest_partition(g)
            assert 1 <= len(p.parts) <= 2
            for part in p.parts:
                side, _ = g.subgraph(part)
                assert is_triangle_forest(side)
                assert is_triangle_forest_by_cycles(side)
            checked += 1
    report(4, checked == 7981, f"{checked} planar graphs <= 8 vertices split into two triangle-forests")


def test_criterion_05_partition_product_roundtrip(graphs_to_6):
    checked = 0
    for g in graphs_to_6:
        e = apex_product_structure(g)
        assert e.c == 2
        p1, p2 = embedding_to_partitions(e)
        for a in p1.parts:
            for b in p2.parts:
                assert len(a & b) <= 2
        witnesses = []
        for p, host, coord in ((p1, e.host1, 0), (p2, e.host2, 1)):
            q, _ = quotient_by_partition(g, p)
            witnesses.append(
                VertexMap(q, host, tuple(e.mapping[min(part)][coord] for part in p.parts))
            )
        e2 = partitions_to_embedding(
            g, p1, p2, e.c, e.host1, e.host2, witnesses[0], witnesses[1]
        )
        assert validate_embedding(e2) is None
        assert embedding_to_partitions(e2) == (p1, p2)
        checked += 1
    report(5, checked == 208, f"{checked} graphs <= 6 vertices round-trip through fiber partitions at c=2")


def test_criterion_06_fan_witness_exhaustive():
    total = 0
    for c, n in ((1, 3), (2, 7)):
        f, centre = fan(n)
        partitions = list(all_partitions(f))
        tree_parts = [p for p in partitions if is_tree_partition(f, p)]
        for p in tree_parts:
            for q in partitions:
                if intersection_cap_violation(p, q, c) is not None:
                    continue
                v2 = fan_two_parts_witness(f, centre, p, q, c)
                assert v2 != centre
                assert q.part_of(v2) != q.part_of(centre)
                total += 1
    report(6, total > 0, f"every admissible pair admits a fan witness ({total} pairs at c=1 and c=2)")


def test_criterion_07_double_fan_randomized():
    f, centres = double_fan(11)
    cliques = set(four_cliques(f))
    rng = random.Random(271828)
    for _ in range(10_000):
        p, q = random_double_fan_pair(f, centres, 1, rng)
        rb = double_fan_rainbow_k4(f, centres, p, q, 1)
        assert tuple(sorted(rb.vertices)) in cliques
        assert len(set(rb.q_parts)) == 4
        assert rainbow_k4_oracle(f, q) is not None
    report(7, True, "10^4 sampled admissible pairs on the 11-vertex double-fan all yield verified spread cliques")


def test_criterion_08_counterexample_at_c1(cx1):
    g = cx1.graph
    assert g.n == 4294
    assert is_planar(g)
    cliques = set(four_cliques(g))
    rng = random.Random(161803)
    for _ in range(1000):
        p, q = random_admissible_pair(g, 1, rng)
        rb = find_rainbow_k4(cx1, p, q, 1)
        assert tuple(sorted(rb.vertices)) in cliques
        assert len({q.part_of(v) for v in rb.vertices}) == 4
        assert rainbow_k4_oracle(g, q) is not None
    report(8, True, "4294-vertex planar gadget: 10^3 sampled admissible pairs all forced a spread 4-clique")


def test_criterion_09_distension_width_bounds(cx1):
    rng = random.Random(42424)
    for _ in range(200):
        g = random_graph(rng.randrange(1, 9), rng.uniform(0.15, 0.8), rng)
        t = rng.randrange(1, 4)
        d = distension(g, t)
        tw, td = exact_treewidth(g)
        td2 = distension_tree_decomposition(g, td, d)
        assert validate_decomposition(td2, d.graph) is None
        assert td2.width() <= max(tw, 3)
        pw, pd = exact_pathwidth(g)
        pd2 = distension_path_decomposition(g, pd, d)
        assert validate_decomposition(pd2, d.graph) is None
        assert pd2.width() <= pw + 2
    f = cx1.fan_graph
    td_tower = distension_tree_decomposition(f, fan_tree_decomposition(f.n), cx1.first)
    td_full = distension_tree_decomposition(cx1.first.graph, td_tower, cx1.second)
    assert validate_decomposition(td_full, cx1.graph) is None
    assert td_full.width() <= 3
    pd_tower = distension_path_decomposition(f, fan_path_decomposition(f.n), cx1.first)
    pd_full = distension_path_decomposition(cx1.first.graph, pd_tower, cx1.second)
    assert validate_decomposition(pd_full, cx1.graph) is None
    assert pd_full.width() <= 6
    report(9, True, "200 random distensions within width bounds; gadget tower has tree width <= 3, path width <= 6")


def test_criterion_10_cli_determinism(tmp_path, capsys):
    from prodstruct.cli import main

    ico = tmp_path / "ico.edgelist"
    ico.write_text(format_edge_list(icosahedron()))

    def artifacts_of(*argv: str) -> dict[str, bytes]:
        assert main(list(argv)) == 0
        out = capsys.readouterr().out
        paths = json.loads(out)["artifacts"]
        return {p: open(p, "rb").read() for p in paths}

    identical = True
    # embed
    a = artifacts_of("embed", str(ico), "--out", str(tmp_path / "e1.json"))
    b = artifacts_of("embed", str(ico), "--out", str(tmp_path / "e2.json"))
    identical &= list(a.values()) == list(b.values())
    # gadget (fan + counterexample)
    a = artifacts_of("gadget", "fan", "9", "--out-prefix", str(tmp_path / "f1"))
    b = artifacts_of("gadget", "fan", "9", "--out-prefix", str(tmp_path / "f2"))
    identical &= list(a.values()) == list(b.values())
    a = artifacts_of("gadget", "counterexample", "1", "--out-prefix", str(tmp_path / "c1"))
    b = artifacts_of("gadget", "counterexample", "1", "--out-prefix", str(tmp_path / "c2"))
    identical &= list(a.values()) == list(b.values())
    # tw
    a = artifacts_of("tw", str(ico), "--out", str(tmp_path / "t1.json"))
    b = artifacts_of("tw", str(ico), "--out", str(tmp_path / "t2.json"))
    identical &= list(a.values()) == list(b.values())
    # partition
    a = artifacts_of("partition", str(ico), "--out-prefix", str(tmp_path / "p1"))
    b = artifacts_of("partition", str(ico), "--out-prefix", str(tmp_path / "p2"))
    identical &= list(a.values()) == list(b.values())
    # rainbow on the emitted gadget
    gsize = 4294
    (tmp_path / "pp.json").write_text(json.dumps({"parts": [list(range(gsize))]}))
    (tmp_path / "qq.json").write_text(json.dumps({"parts": [[v] for v in range(gsize)]}))
    a = artifacts_of(
        "rainbow", str(tmp_path / "c1.sidecar.json"), str(tmp_path / "pp.json"),
        str(tmp_path / "qq.json"), "--c", "1", "--out", str(tmp_path / "r1.json"),
    )
    b = artifacts_of(
        "rainbow", str(tmp_path / "c1.sidecar.json"), str(tmp_path / "pp.json"),
        str(tmp_path / "qq.json"), "--c", "1", "--out", str(tmp_path / "r2.json"),
    )
    identical &= list(a.values()) == list(b.values())
    # corpus
    cdir = tmp_path / "corpus"
    cdir.mkdir()
    (cdir / "ico.edgelist").write_text(format_edge_list(icosahedron()))
    (cdir / "k5.edgelist").write_text(format_edge_list(complete_graph(5)))
    a = artifacts_of("corpus", str(cdir), "--out", str(tmp_path / "agg1.json"))
    b = artifacts_of("corpus", str(cdir), "--out", str(tmp_path / "agg2.json"))
    identical &= list(a.values()) == list(b.values())
    # verify emits no artifact; its report must be stable minus timing
    ejson = tmp_path / "e1.json"
    assert main(["verify", str(ejson), str(ico)]) == 0
    r1 = json.loads(capsys.readouterr().out)
    assert main(["verify", str(ejson), str(ico)]) == 0
    r2 = json.loads(capsys.readouterr().out)
    r1.pop("timing_ms"), r2.pop("timing_ms")
    identical &= r1 == r2
    report(10, identical, "all CLI commands re-run byte-identically on identical inputs")
