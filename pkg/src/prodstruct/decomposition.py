"""Tree and path decompositions, exact widths, and decomposition transport
along edge-path attachments (distensions).

Width computations are exact subset DPs over elimination orderings with a hard
vertex cap; they return certified witness decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Sequence

import numpy as np

from ._kernels import pathwidth_dp_table, treewidth_dp_table
from .errors import InternalInvariantError, PreconditionError, TreewidthCapError
from .graph import Graph, blocks, is_forest, is_tree

if TYPE_CHECKING:  # pragma: no cover
    from .lowerbound import DistensionGraph

WIDTH_CAP_DEFAULT = 14


@dataclass(frozen=True)
class Violation:
    """First failed decomposition/embedding axiom, with a witness."""

    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not is_tree(self.tree):
            raise PreconditionError("decomposition index graph must be a tree")
        if len(self.bags) != self.tree.n:
            raise PreconditionError("bags must be total on the tree nodes")

    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def node_count(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.bags:
            raise PreconditionError("a path decomposition needs at least one bag")

    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def as_tree(self) -> TreeDecomposition:
        m = len(self.bags)
        return TreeDecomposition(
            Graph(m, [(i, i + 1) for i in range(m - 1)]), self.bags
        )


def _bag_indices(bags: Sequence[frozenset[int]], n: int) -> list[list[int]]:
    where: list[list[int]] = [[] for _ in range(n)]
    for i, bag in enumerate(bags):
        for v in bag:
            if not (0 <= v < n):
                raise PreconditionError(f"bag {i} mentions unknown vertex {v}")
            where[v].append(i)
    return where


def validate_decomposition(
    d: TreeDecomposition | PathDecomposition, g: Graph
) -> Violation | None:
    """Check the decomposition axioms against g.

    Reports the first violation in fixed order: edge coverage (smallest
    uncovered edge), then vertex traces (smallest vertex with an empty or
    disconnected trace).
    """
    if isinstance(d, PathDecomposition):
        bags = d.bags
        tree_adj = None
    else:
        bags = d.bags
        tree_adj = d.tree.adjacency_lists()
    where = _bag_indices(bags, g.n)
    for u, v in sorted(g.edges):
        small, big = (u, v) if len(where[u]) <= len(where[v]) else (v, u)
        big_set = set(where[big])
        if not any(i in big_set for i in where[small]):
            return Violation("edge-coverage", f"edge ({u},{v}) is in no bag")
    for v in range(g.n):
        trace = where[v]
        if not trace:
            return Violation("vertex-trace", f"vertex {v} is in no bag")
        if tree_adj is None:
            if trace[-1] - trace[0] + 1 != len(trace):
                return Violation("vertex-trace", f"vertex {v} has a gapped trace")
        else:
            members = set(trace)
            seen = {trace[0]}
            stack = [trace[0]]
            while stack:
                x = stack.pop()
                for y in tree_adj[x]:
                    if y in members and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(members):
                return Violation("vertex-trace", f"vertex {v} has a disconnected trace")
    return None


# ---------------------------------------------------------------------------
# Exact widths with certified witnesses
# ---------------------------------------------------------------------------


def _neighbor_masks(g: Graph) -> np.ndarray:
    masks = np.zeros(g.n, np.int64)
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _elimination_degree(adj_masks: list[int], eliminated: int, v: int) -> int:
    """Degree of v at elimination time, all earlier-eliminated in `eliminated`."""
    bit = 1 << v
    comp = bit
    nbrs = adj_masks[v]
    while True:
        grow = nbrs & eliminated & ~comp
        if not grow:
            break
        comp |= grow
        g2 = grow
        while g2:
            u = (g2 & -g2).bit_length() - 1
            g2 &= g2 - 1
            nbrs |= adj_masks[u]
    return (nbrs & ~eliminated & ~bit).bit_count()


def _treewidth_order(g: Graph, table: np.ndarray) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    order = []
    s = (1 << g.n) - 1
    while s:
        target = int(table[s])
        for v in range(g.n):
            bit = 1 << v
            if not s & bit:
                continue
            sv = s ^ bit
            if max(int(table[sv]), _elimination_degree(masks, sv, v)) == target:
                order.append(v)
                s = sv
                break
        else:  # pragma: no cover
            raise InternalInvariantError("width table has no consistent predecessor")
    order.reverse()
    return order


def _decomposition_from_elimination(g: Graph, order: list[int]) -> TreeDecomposition:
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    pos = {v: i for i, v in enumerate(order)}
    bags: list[frozenset[int]] = []
    parent: list[int | None] = []
    for v in order:
        nb = sorted(adj[v])
        bags.append(frozenset([v] + nb))
        for a in nb:
            adj[a].discard(v)
        for a, b in combinations(nb, 2):
            adj[a].add(b)
            adj[b].add(a)
        parent.append(pos[min(nb, key=lambda u: pos[u])] if nb else None)
    edges = []
    for i, p in enumerate(parent):
        if p is not None:
            edges.append((i, p))
        elif i + 1 < len(order):
            edges.append((i, i + 1))  # chain component roots to keep one tree
    if g.n == 0:
        return TreeDecomposition(Graph(1), (frozenset(),))
    return TreeDecomposition(Graph(g.n, edges), tuple(bags))


def exact_treewidth(
    g: Graph, max_vertices: int = WIDTH_CAP_DEFAULT
) -> tuple[int, TreeDecomposition]:
    """True treewidth plus a witness decomposition of exactly that width.

    Exhaustive over elimination orderings (subset DP); refuses above the cap
    rather than approximating.
    """
    if g.n > max_vertices:
        raise TreewidthCapError(
            f"exact treewidth cap is {max_vertices} vertices, got {g.n}"
        )
    if g.n == 0:
        return -1, TreeDecomposition(Graph(1), (frozenset(),))
    table = treewidth_dp_table(_neighbor_masks(g), g.n)
    tw = int(table[(1 << g.n) - 1])
    witness = _decomposition_from_elimination(g, _treewidth_order(g, table))
    if witness.width() != tw:  # pragma: no cover
        raise InternalInvariantError("witness width disagrees with DP value")
    return tw, witness


def _pathwidth_order(g: Graph, table: np.ndarray) -> list[int]:
    order = []
    s = (1 << g.n) - 1
    while s:
        for v in range(g.n):
            bit = 1 << v
            if s & bit and int(table[s ^ bit]) <= int(table[s]):
                order.append(v)
                s ^= bit
                break
        else:  # pragma: no cover
            raise InternalInvariantError("pathwidth table has no consistent predecessor")
    order.reverse()
    return order


def exact_pathwidth(
    g: Graph, max_vertices: int = WIDTH_CAP_DEFAULT
) -> tuple[int, PathDecomposition]:
    """True pathwidth plus a witness path decomposition of that width
    (vertex-separation subset DP)."""
    if g.n > max_vertices:
        raise TreewidthCapError(
            f"exact pathwidth cap is {max_vertices} vertices, got {g.n}"
        )
    if g.n == 0:
        return -1, PathDecomposition((frozenset(),))
    table = pathwidth_dp_table(_neighbor_masks(g), g.n)
    pw = int(table[(1 << g.n) - 1])
    order = _pathwidth_order(g, table)
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    bags = []
    prefix = 0
    for v in order:
        boundary = [
            u for u in range(g.n) if prefix & (1 << u) and masks[u] & ~prefix
        ]
        bags.append(frozenset(boundary + [v]))
        prefix |= 1 << v
    witness = PathDecomposition(tuple(bags))
    if witness.width() != pw:  # pragma: no cover
        raise InternalInvariantError("witness width disagrees with DP value")
    return pw, witness


# ---------------------------------------------------------------------------
# Recognizers
# ---------------------------------------------------------------------------


def is_apex_forest(g: Graph) -> frozenset[int] | None:
    """Smallest vertex set A with |A| <= 1 and g - A a forest, or None."""
    if is_forest(g):
        return frozenset()
    for a in range(g.n):
        sub, _ = g.without_vertices([a])
        if is_forest(sub):
            return frozenset([a])
    return None


def is_triangle_forest(g: Graph) -> bool:
    """True iff every cycle is a triangle (every block is K2 or K3)."""
    blks, _ = blocks(g)
    return all(len(b) <= 3 for b in blks)


# ---------------------------------------------------------------------------
# Decomposition transport along distensions
# ---------------------------------------------------------------------------


def _check_distension_of(dist: "DistensionGraph", g: Graph) -> None:
    from .lowerbound import validate_distension

    if dist.base != g:
        raise PreconditionError("distension was not built over this graph")
    validate_distension(dist)


def distension_tree_decomposition(
    g: Graph, d: TreeDecomposition, dist: "DistensionGraph"
) -> TreeDecomposition:
    """Extend a tree decomposition of g to one of dist.graph.

    For each base edge vw a fresh chain of bags {v,w,u_i,u_{i+1}} hangs off a
    node whose bag contains both endpoints, so the width is <= max(width(d), 3).
    """
    bad = validate_decomposition(d, g)
    if bad is not None:
        raise PreconditionError(f"invalid decomposition of the base graph ({bad})")
    _check_distension_of(dist, g)
    bags = list(d.bags)
    edges = list(d.tree.edges)
    for u, v in sorted(g.edges):
        path = dist.edge_paths[(u, v)]
        anchor = next(i for i, b in enumerate(d.bags) if u in b and v in b)
        if len(path) == 1:
            bags.append(frozenset((u, v, path[0])))
            edges.append((anchor, len(bags) - 1))
            continue
        prev = anchor
        for i in range(len(path) - 1):
            bags.append(frozenset((u, v, path[i], path[i + 1])))
            edges.append((prev, len(bags) - 1))
            prev = len(bags) - 1
    return TreeDecomposition(Graph(len(bags), edges), tuple(bags))


def distension_path_decomposition(
    g: Graph, d: PathDecomposition, dist: "DistensionGraph"
) -> PathDecomposition:
    """Extend a path decomposition of g to one of dist.graph.

    Bags are first duplicated (in sequence order, edges in lexicographic
    order) so each base edge owns a private copy; the edge's path vertices are
    then threaded through that copy two at a time. Width grows by at most 2.
    """
    bad = validate_decomposition(d, g)
    if bad is not None:
        raise PreconditionError(f"invalid decomposition of the base graph ({bad})")
    _check_distension_of(dist, g)
    owners: list[list[tuple[int, int]]] = [[] for _ in d.bags]
    for u, v in sorted(g.edges):
        owners[next(i for i, b in enumerate(d.bags) if u in b and v in b)].append((u, v))
    out: list[frozenset[int]] = []
    for bag, edges_here in zip(d.bags, owners):
        if not edges_here:
            out.append(bag)
            continue
        for u, v in edges_here:
            out.append(bag)
            path = dist.edge_paths[(u, v)]
            if len(path) == 1:
                out.append(bag | {path[0]})
            else:
                for i in range(len(path) - 1):
                    out.append(bag | {path[i], path[i + 1]})
    return PathDecomposition(tuple(out))
