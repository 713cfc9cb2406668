"""Canonical forms for small graphs and isomorphism-reduced catalogues.

Canonical form = minimum packed adjacency bitstring over all vertex
permutations compatible with the stable color-refinement classes. Color
refinement splits most graphs into small classes, so the permutation scan
(the hot kernel) usually sees only a handful of rows; fully regular graphs
fall back to the whole factorial scan, which the numba backend absorbs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

import numpy as np

from . import _kernels
from .errors import CanonicalCapError
from .graph import Graph
from .planarity import is_planar

# Largest permutation set the canonical search will materialize.
PERMUTATION_CAP = 2_000_000


def _refinement_classes(g: Graph) -> list[list[int]]:
    """Stable color-refinement classes, ordered by an isomorphism-invariant key."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


@lru_cache(maxsize=64)
def _perms_for_profile(profile: tuple[int, ...]) -> np.ndarray:
    total = 1
    for s in profile:
        for i in range(2, s + 1):
            total *= i
    if total > PERMUTATION_CAP:
        raise CanonicalCapError(
            f"canonical search over {total} permutations exceeds the cap"
        )
    offsets = []
    off = 0
    for s in profile:
        offsets.append(off)
        off += s
    blocks = [
        [list(p) for p in permutations(range(o, o + s))]
        for o, s in zip(offsets, profile)
    ]
    rows = [sum(combo, []) for combo in product(*blocks)]
    return np.array(rows, dtype=np.int64)


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, bits) pair identifying g up to isomorphism."""
    n = g.n
    if n <= 1:
        return (n, 0)
    classes = _refinement_classes(g)
    layout = [v for cls in classes for v in cls]
    pos = {v: i for i, v in enumerate(layout)}
    adj = np.zeros((n, n), np.uint8)
    for u, v in g.edges:
        adj[pos[u], pos[v]] = 1
        adj[pos[v], pos[u]] = 1
    perms = _perms_for_profile(tuple(len(c) for c in classes))
    return (n, _kernels.min_adjacency_bits(adj, perms))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_form(a) == canonical_form(b)


def _from_bits(n: int, bits: int) -> Graph:
    edges = []
    k = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            k -= 1
            if (bits >> k) & 1:
                edges.append((i, j))
    return Graph(n, edges)


def _augmentations(parents: tuple[Graph, ...], n: int, nonempty: bool, planar: bool):
    """All one-vertex extensions of the parents, reduced up to isomorphism."""
    seen: dict[int, Graph] = {}
    low = 1 if nonempty else 0
    for g in parents:
        base = list(g.edges)
        for mask in range(low, 1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if (mask >> v) & 1]
            cand = Graph(n, base + extra)
            if planar and not is_planar(cand):
                continue
            _, bits = canonical_form(cand)
            if bits not in seen:
                seen[bits] = _from_bits(n, bits)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=64)
def all_graphs(n: int, planar_only: bool = False) -> tuple[Graph, ...]:
    """Every graph on exactly n vertices, up to isomorphism (n <= 8 is practical).

    Vertex deletion preserves planarity, so with planar_only=True the
    augmentation can stay inside the planar world and still be exhaustive.
    """
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    parents = all_graphs(n - 1, planar_only)
    return _augmentations(parents, n, nonempty=False, planar=planar_only)


@lru_cache(maxsize=64)
def connected_graphs(n: int, planar_only: bool = False) -> tuple[Graph, ...]:
    """Connected graphs on exactly n vertices up to isomorphism.

    Exhaustive because every connected graph has a non-cut vertex, whose
    deletion keeps the parent connected (and planar when the child was).
    """
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1),)
    parents = connected_graphs(n - 1, planar_only)
    return _augmentations(parents, n, nonempty=True, planar=planar_only)


def graphs_up_to(max_n: int, connected: bool = False, planar_only: bool = False):
    """All graphs with 1..max_n vertices, up to isomorphism."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        if connected:
            out.extend(connected_graphs(n, planar_only))
        else:
            out.extend(all_graphs(n, planar_only))
    return out
