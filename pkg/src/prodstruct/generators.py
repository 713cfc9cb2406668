"""Random and exhaustive generators for partitions and structured test graphs.

The admissible-pair samplers produce (tree-partition, capped partition) pairs
for the lower-bound finders; the exhaustive set-partition enumerator backs the
small-scale complete sweeps.
"""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph, VertexPartition, complete_graph
from .lowerbound import intersection_cap_violation, is_tree_partition
from .planarity import is_planar


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    """Every partition of `items` into nonempty blocks (restricted growth order)."""
    n = len(items)
    if n == 0:
        yield []
        return
    codes = [0] * n

    def rec(i: int, maxcode: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for item, code in zip(items, codes):
                blocks.setdefault(code, []).append(item)
            yield [blocks[c] for c in sorted(blocks)]
            return
        for code in range(maxcode + 2):
            codes[i] = code
            yield from rec(i + 1, max(maxcode, code))

    yield from rec(1, 0)


def all_partitions(g: Graph) -> Iterator[VertexPartition]:
    for blocks in set_partitions(list(range(g.n))):
        yield VertexPartition(g, blocks)


# ---------------------------------------------------------------------------
# Random admissible partition pairs
# ---------------------------------------------------------------------------


def random_capped_partition(
    g: Graph, p: VertexPartition, c: int, rng: random.Random
) -> VertexPartition:
    """Greedy random partition q with every |P cap Q| <= c.

    Vertices are visited in random order; each draws a random existing block
    (or a fresh one), redrawing on cap violations. A fresh block is always
    admissible, so this never fails.
    """
    order = list(range(g.n))
    rng.shuffle(order)
    blocks: list[list[int]] = []
    fill: list[dict[int, int]] = []  # per block: p-part -> count
    for v in order:
        pid = p.part_of(v)
        placed = False
        for _ in range(20):
            choice = rng.randrange(len(blocks) + 1)
            if choice < len(blocks) and fill[choice].get(pid, 0) >= c:
                continue  # violates the cap: redraw
            if choice == len(blocks):
                blocks.append([v])
                fill.append({pid: 1})
            else:
                blocks[choice].append(v)
                fill[choice][pid] = fill[choice].get(pid, 0) + 1
            placed = True
            break
        if not placed:
            blocks.append([v])
            fill.append({pid: 1})
    return VertexPartition(g, blocks)


def random_tree_partition(g: Graph, rng: random.Random) -> VertexPartition:
    """Random tree-partition: breadth-first layers from a random root, with
    random merges of consecutive layers. The quotient is always a path."""
    if g.n == 0:
        raise ValueError("empty graph")
    root = rng.randrange(g.n)
    dist = [-1] * g.n
    dist[root] = 0
    frontier = [root]
    layers = [[root]]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        if nxt:
            layers.append(nxt)
        frontier = nxt
    stray = [v for v in range(g.n) if dist[v] == -1]
    for v in stray:  # other components: fold into the last layer
        layers[-1].append(v)
    merged: list[list[int]] = []
    for layer in layers:
        if merged and rng.random() < 0.3:
            merged[-1].extend(layer)
        else:
            merged.append(list(layer))
    return VertexPartition(g, merged)


def random_double_fan_pair(
    f: Graph,
    centres: tuple[int, int],
    c: int,
    rng: random.Random,
    max_tries: int = 200,
) -> tuple[VertexPartition, VertexPartition]:
    """Admissible (p, q) for a double-fan with the centres split across both
    p-parts and across two q-parts."""
    v1, v2 = centres
    for _ in range(max_tries):
        side = [rng.random() < 0.5 for _ in range(f.n)]
        side[v1], side[v2] = False, True
        parts = [
            [v for v in range(f.n) if not side[v]],
            [v for v in range(f.n) if side[v]],
        ]
        p = VertexPartition(f, parts)
        q = random_capped_partition(f, p, c, rng)
        if q.part_of(v1) == q.part_of(v2):
            continue
        if intersection_cap_violation(p, q, c) is None and is_tree_partition(f, p):
            return p, q
    raise RuntimeError("failed to sample an admissible partition pair")


def random_admissible_pair(
    g: Graph, c: int, rng: random.Random
) -> tuple[VertexPartition, VertexPartition]:
    """Admissible (tree-partition, capped partition) pair for any graph."""
    p = random_tree_partition(g, rng)
    q = random_capped_partition(g, p, c, rng)
    return p, q


# ---------------------------------------------------------------------------
# Structured random graphs
# ---------------------------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_planar_graph(n: int, rng: random.Random, density: float = 1.0) -> Graph:
    """Greedy planar graph: shuffled candidate edges kept while planarity holds."""
    candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(candidates)
    kept: list[tuple[int, int]] = []
    for u, v in candidates:
        if rng.random() > density:
            continue
        trial = Graph(n, kept + [(u, v)])
        if is_planar(trial):
            kept.append((u, v))
    return Graph(n, kept)


def random_two_apex_graph(core_n: int, rng: random.Random) -> Graph:
    """A random planar core plus two universal vertices (indices core_n, core_n+1)."""
    core = random_planar_graph(core_n, rng)
    edges = list(core.edges)
    a, b = core_n, core_n + 1
    edges.append((a, b))
    edges += [(v, a) for v in range(core_n)]
    edges += [(v, b) for v in range(core_n)]
    return Graph(core_n + 2, edges)


def random_triangle_forest(max_n: int, rng: random.Random) -> Graph:
    """Glue K2/K3 blocks at random cut vertices until max_n is reached."""
    n = 3 if rng.random() < 0.5 else 2
    edges = [(0, 1)] if n == 2 else [(0, 1), (0, 2), (1, 2)]
    while n < max_n:
        attach = rng.randrange(n)
        if rng.random() < 0.5 and n + 1 <= max_n:
            edges.append((attach, n))
            n += 1
        elif n + 2 <= max_n:
            edges += [(attach, n), (attach, n + 1), (n, n + 1)]
            n += 2
        else:
            break
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# A few fixed classics (test inputs and CLI demos)
# ---------------------------------------------------------------------------


def octahedron() -> Graph:
    """K_{2,2,2}: non-adjacent pairs (0,1), (2,3), (4,5)."""
    anti = {(0, 1), (2, 3), (4, 5)}
    edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if (u, v) not in anti
    ]
    return Graph(6, edges)


def icosahedron() -> Graph:
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(i + 5, (i % 5) + 6) for i in range(1, 6)]
    edges += [(11, i) for i in range(6, 11)]
    edges += [(i, i + 5) for i in range(1, 6)]
    edges += [(i, (i % 5) + 6) for i in range(1, 6)]
    return Graph(12, edges)


def dodecahedron() -> Graph:
    lcf = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4] * 2
    edges = [(i, (i + 1) % 20) for i in range(20)]
    edges += [(i, (i + lcf[i]) % 20) for i in range(20)]
    return Graph(20, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def wheel(n: int) -> Graph:
    """Cycle on n vertices plus a dominant hub (index n)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph(n + 1, edges)


__all__ = [
    "set_partitions",
    "all_partitions",
    "random_capped_partition",
    "random_tree_partition",
    "random_double_fan_pair",
    "random_admissible_pair",
    "random_graph",
    "random_planar_graph",
    "random_two_apex_graph",
    "random_triangle_forest",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "petersen",
    "wheel",
    "complete_graph",
]
