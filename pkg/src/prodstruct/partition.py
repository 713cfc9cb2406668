"""Structural partition engines for planar graphs.

Two operations carry the upper-bound pipeline: splitting a planar graph into
two induced triangle-forests (exact backtracking search; existence is
guaranteed, so failure on planar input is a package bug), and extracting a
matching from a triangle-forest whose contraction leaves a forest.
"""

from __future__ import annotations

from .decomposition import is_triangle_forest
from .errors import InternalInvariantError, PreconditionError
from .graph import (
    Graph,
    Matching,
    VertexPartition,
    blocks,
    is_forest,
    quotient_by_matching,
)
from .planarity import is_planar


def _subset_is_triangle_forest(g: Graph, vertices: set[int]) -> bool:
    """Block test on the induced subgraph, without building a Graph value."""
    sub, _ = g.subgraph(vertices)
    blks, _ = blocks(sub)
    return all(len(b) <= 3 for b in blks)


def two_triangle_forest_partition(g: Graph) -> VertexPartition:
    """Partition the vertices of a planar graph into at most two classes, each
    inducing a triangle-forest.

    Exact backtracking over 2-colorings: vertices in descending-degree order
    (ties by index), side 0 first, pruning as soon as a side stops being a
    triangle-forest. Deterministic. A forest input comes back as one part.
    """
    if not is_planar(g):
        raise PreconditionError("input graph is not planar")
    if g.n == 0:
        raise PreconditionError("cannot partition the empty vertex set")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    sides: tuple[set[int], set[int]] = (set(), set())
    next_side = [0] * g.n  # per depth: next side to try for order[k]
    k = 0
    while k < g.n:
        v = order[k]
        placed = False
        while next_side[k] < 2:
            s = next_side[k]
            next_side[k] += 1
            sides[s].add(v)
            if _subset_is_triangle_forest(g, sides[s]):
                placed = True
                break
            sides[s].discard(v)
        if placed:
            k += 1
            if k < g.n:
                next_side[k] = 0
            continue
        # both sides failed: undo the previous choice and retry it
        k -= 1
        if k < 0:
            raise InternalInvariantError(
                "no triangle-forest 2-coloring found for a planar graph"
            )
        prev = order[k]
        sides[0].discard(prev)
        sides[1].discard(prev)
    return VertexPartition(g, [s for s in sides if s])


def contractible_matching(g: Graph) -> Matching:
    """A matching of a triangle-forest whose contraction yields a forest.

    Deterministic loop: repeatedly delete the lowest-index vertex of degree
    <= 1; otherwise every leaf block is a triangle, so take the one with the
    smallest minimum vertex, match its two non-cut vertices, and delete them.
    """
    if not is_triangle_forest(g):
        raise PreconditionError("input graph is not a triangle-forest")
    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in range(g.n)}
    matched: list[tuple[int, int]] = []
    while adj:
        low_deg = [v for v in adj if len(adj[v]) <= 1]
        if low_deg:
            v = min(low_deg)
            for w in adj[v]:
                adj[w].discard(v)
            del adj[v]
            continue
        live, _ = g.subgraph(adj.keys())
        ids = sorted(adj.keys())
        blks, cuts = blocks(live)
        leaf = None
        for b in blks:
            if sum(1 for v in b if v in cuts) <= 1:
                if leaf is None or min(b) < min(leaf):
                    leaf = b
        if leaf is None or len(leaf) != 3:  # pragma: no cover
            raise InternalInvariantError("leaf block of a pruned triangle-forest not a triangle")
        non_cut = sorted(ids[v] for v in leaf if v not in cuts)
        u, v = non_cut[0], non_cut[1]
        matched.append((u, v))
        for x in (u, v):
            for w in adj[x]:
                adj[w].discard(x)
            del adj[x]
    return Matching(matched)


def planar_contractible_matching(g: Graph) -> tuple[Matching, VertexPartition]:
    """Matching M of a planar graph such that g/M splits into two induced forests.

    Composes the triangle-forest 2-coloring with per-side contractible
    matchings; returns M and the two-sided partition of the quotient graph.
    """
    if not is_planar(g):
        raise PreconditionError("input graph is not planar")
    split = two_triangle_forest_partition(g)
    all_pairs: list[tuple[int, int]] = []
    for part in split.parts:
        sub, old = g.subgraph(part)
        for u, v in contractible_matching(sub):
            all_pairs.append((old[u], old[v]))
    m = Matching(all_pairs)
    quotient, qmap = quotient_by_matching(g, m)
    image_parts = [sorted({qmap(v) for v in part}) for part in split.parts]
    for part in image_parts:
        side, _ = quotient.subgraph(part)
        if not is_forest(side):  # pragma: no cover
            raise InternalInvariantError("quotient side is not a forest")
    return m, VertexPartition(quotient, image_parts)
