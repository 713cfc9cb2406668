"""Extremal gadgets and the constructive finders behind the tightness results.

Gadgets: fans, double-fans, distensions (a fresh path attached across every
edge, complete to its endpoints), and the two-level distended fan used to
defeat tree x small-treewidth product hosts. The finders locate, inside any
admissible pair of partitions, a 4-clique spread over four distinct parts of
the second partition; a brute-force clique oracle cross-checks them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .decomposition import PathDecomposition, TreeDecomposition
from .errors import InternalInvariantError, PreconditionError, SizeGuardError
from .graph import (
    Graph,
    VertexPartition,
    is_forest,
    quotient_by_partition,
)

COUNTEREXAMPLE_CAP_DEFAULT = 2


# ---------------------------------------------------------------------------
# Gadget constructors
# ---------------------------------------------------------------------------


def fan(n: int) -> tuple[Graph, int]:
    """Path on n-1 vertices plus one dominant centre (vertex 0). 2n-3 edges."""
    if n < 2:
        raise PreconditionError("a fan needs at least 2 vertices")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, edges), 0


def double_fan(n: int) -> tuple[Graph, tuple[int, int]]:
    """Path on n-2 vertices plus two adjacent dominant centres (vertices 0, 1)."""
    if n < 3:
        raise PreconditionError("a double-fan needs at least 3 vertices")
    edges = [(0, 1)]
    edges += [(c, i) for c in (0, 1) for i in range(2, n)]
    edges += [(i, i + 1) for i in range(2, n - 1)]
    return Graph(n, edges), (0, 1)


@dataclass(frozen=True)
class DistensionGraph:
    """A graph plus the provenance of its per-edge attached paths."""

    graph: Graph
    base: Graph
    t: int
    edge_paths: dict[tuple[int, int], tuple[int, ...]]

    def double_fan_vertices(self, u: int, v: int) -> tuple[int, ...]:
        """Vertex set of the double-fan grown over base edge uv."""
        key = (u, v) if u < v else (v, u)
        return (key[0], key[1]) + self.edge_paths[key]


def distension(g: Graph, t: int) -> DistensionGraph:
    """Attach, across every edge uv, a fresh t-vertex path whose vertices are
    all adjacent to both u and v. Paths are pairwise disjoint and keep the base
    vertex indices; new vertices are appended in sorted edge order."""
    if t < 1:
        raise PreconditionError("distension length must be >= 1")
    nxt = g.n
    edges = list(g.edges)
    edge_paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for u, v in sorted(g.edges):
        path = tuple(range(nxt, nxt + t))
        nxt += t
        edge_paths[(u, v)] = path
        for i, p in enumerate(path):
            edges.append((u, p))
            edges.append((v, p))
            if i + 1 < t:
                edges.append((p, path[i + 1]))
    return DistensionGraph(Graph(nxt, edges), g, t, edge_paths)


def validate_distension(d: DistensionGraph) -> None:
    """Check every structural invariant of a distension; raises on failure."""
    expected = set(d.base.edges)
    seen_new: set[int] = set()
    for (u, v), path in d.edge_paths.items():
        if (u, v) not in d.base.edges:
            raise PreconditionError(f"path attached to non-edge ({u},{v})")
        if len(path) != d.t:
            raise PreconditionError(f"path over ({u},{v}) has length {len(path)} != t")
        for p in path:
            if p < d.base.n or p in seen_new:
                raise PreconditionError("paths must be fresh and pairwise disjoint")
            seen_new.add(p)
            expected.add((u, p) if u < p else (p, u))
            expected.add((v, p) if v < p else (p, v))
        for a, b in zip(path, path[1:]):
            expected.add((a, b) if a < b else (b, a))
    if set(d.edge_paths) != set(d.base.edges):
        raise PreconditionError("every base edge needs exactly one attached path")
    if d.graph.n != d.base.n + d.t * d.base.m:
        raise PreconditionError("vertex count does not match base + t*edges")
    if set(d.graph.edges) != expected:
        raise PreconditionError("edge set differs from the distension construction")


@dataclass(frozen=True)
class CounterexampleStructure:
    """Fan -> distension -> distension tower with provenance at every level."""

    c: int
    t: int
    fan_graph: Graph
    centre: int
    first: DistensionGraph  # over the fan
    second: DistensionGraph  # over first.graph

    @property
    def graph(self) -> Graph:
        return self.second.graph

    def layer_bounds(self) -> tuple[int, int, int, int]:
        return (0, self.fan_graph.n, self.first.graph.n, self.graph.n)


def counterexample_graph(
    c: int, max_c: int = COUNTEREXAMPLE_CAP_DEFAULT
) -> CounterexampleStructure:
    """The two-level distended fan for intersection bound c: with
    t = 8c^2 + 2c - 1, distend a fan on t+1 vertices twice. Planar, and every
    admissible partition pair is forced to contain a spread 4-clique.

    Vertex counts grow like c^6; instances above max_c are refused.
    """
    if c < 1:
        raise PreconditionError("intersection bound c must be >= 1")
    if c > max_c:
        raise SizeGuardError(
            f"refusing to build the c={c} instance (cap {max_c}); raise max_c to override"
        )
    t = 8 * c * c + 2 * c - 1
    f, centre = fan(t + 1)
    first = distension(f, t)
    second = distension(first.graph, t)
    return CounterexampleStructure(c, t, f, centre, first, second)


# ---------------------------------------------------------------------------
# Reference decompositions for fans
# ---------------------------------------------------------------------------


def fan_path_decomposition(n: int) -> PathDecomposition:
    """Width-min path decomposition of fan(n): centre plus a sliding window."""
    if n < 2:
        raise PreconditionError("a fan needs at least 2 vertices")
    if n == 2:
        return PathDecomposition((frozenset({0, 1}),))
    return PathDecomposition(
        tuple(frozenset({0, i, i + 1}) for i in range(1, n - 1))
    )


def fan_tree_decomposition(n: int) -> TreeDecomposition:
    return fan_path_decomposition(n).as_tree()


# ---------------------------------------------------------------------------
# Partition utilities
# ---------------------------------------------------------------------------


def is_tree_partition(g: Graph, p: VertexPartition) -> bool:
    """True iff the quotient is acyclic (a forest sits inside a tree)."""
    if p.host != g:
        raise PreconditionError("partition does not partition this graph")
    quotient, _ = quotient_by_partition(g, p)
    return is_forest(quotient)


def intersection_cap_violation(
    p: VertexPartition, q: VertexPartition, c: int
) -> tuple[int, int, int] | None:
    """First (p-part, q-part, size) with |P cap Q| > c, scanning by vertex."""
    counts: dict[tuple[int, int], int] = {}
    worst: tuple[int, int, int] | None = None
    for v in range(p.host.n):
        key = (p.part_of(v), q.part_of(v))
        counts[key] = counts.get(key, 0) + 1
    for (i, j), size in sorted(counts.items()):
        if size > c:
            worst = (i, j, size)
            break
    return worst


def _path_order(g: Graph, vertices: list[int]) -> list[int]:
    """Order of a vertex subset that induces a path, walking from the
    lowest-index endpoint. Raises if the subset is not an induced path."""
    vset = set(vertices)
    deg = {v: sum(1 for w in g.neighbors(v) if w in vset) for v in vertices}
    if len(vertices) == 1:
        return list(vertices)
    ends = sorted(v for v in vertices if deg[v] == 1)
    if len(ends) != 2 or any(deg[v] > 2 for v in vertices):
        raise PreconditionError("vertex set does not induce a path")
    order = [ends[0]]
    prev = None
    while len(order) < len(vertices):
        nxt = [w for w in g.neighbors(order[-1]) if w in vset and w != prev]
        if len(nxt) != 1:
            raise PreconditionError("vertex set does not induce a path")
        prev = order[-1]
        order.append(nxt[0])
    return order


def _runs_avoiding(order: list[int], removed: set[int]) -> list[list[int]]:
    """Maximal contiguous stretches of a path order avoiding `removed`."""
    runs: list[list[int]] = []
    cur: list[int] = []
    for v in order:
        if v in removed:
            if cur:
                runs.append(cur)
                cur = []
        else:
            cur.append(v)
    if cur:
        runs.append(cur)
    return runs


def _first_big_run(runs: list[list[int]], minimum: int) -> list[int] | None:
    best = None
    for run in runs:
        if len(run) >= minimum and (best is None or min(run) < min(best)):
            best = run
    return best


# ---------------------------------------------------------------------------
# Witness finders
# ---------------------------------------------------------------------------


def fan_two_parts_witness(
    f: Graph, centre: int, p: VertexPartition, q: VertexPartition, c: int
) -> int:
    """A path vertex of the fan lying outside the centre's q-part.

    Requires the fan to have at least c^2+c+1 vertices, p to be a
    tree-partition, and every p-part/q-part intersection at most c.
    """
    if f.degree(centre) != f.n - 1:
        raise PreconditionError("centre is not dominant in the fan")
    rest = [v for v in range(f.n) if v != centre]
    order = _path_order(f, rest)
    if f.n < c * c + c + 1:
        raise PreconditionError(f"fan needs at least c^2+c+1={c*c+c+1} vertices, has {f.n}")
    if p.host != f or q.host != f:
        raise PreconditionError("partitions must partition the fan")
    if not is_tree_partition(f, p):
        raise PreconditionError("first partition is not a tree-partition")
    viol = intersection_cap_violation(p, q, c)
    if viol is not None:
        raise PreconditionError(f"parts {viol[0]},{viol[1]} intersect in {viol[2]} > c vertices")
    p1 = p.part_of(centre)
    q1 = q.part_of(centre)
    removed = {v for v in rest if p.part_of(v) == p1 and q.part_of(v) == q1}
    run = _first_big_run(_runs_avoiding(order, removed), c + 1)
    if run is None:  # pragma: no cover - long run always exists at this size
        raise InternalInvariantError("no long run outside the centre's shared cell")
    in_centre_part = sorted(v for v in run if p.part_of(v) == p1)
    if in_centre_part:
        return in_centre_part[0]
    parts_here = {p.part_of(v) for v in run}
    if len(parts_here) != 1:  # pragma: no cover - star-partition structure is forced
        raise InternalInvariantError("run off the centre part is not inside one part")
    outside = sorted(v for v in run if q.part_of(v) != q1)
    if not outside:  # pragma: no cover - counting argument guarantees one
        raise InternalInvariantError("run has no vertex outside the centre's q-part")
    return outside[0]


@dataclass(frozen=True)
class RainbowK4:
    """A 4-clique whose vertices occupy four pairwise distinct q-parts."""

    vertices: tuple[int, int, int, int]
    q_parts: tuple[int, int, int, int]

    def __post_init__(self):
        if len(set(self.vertices)) != 4 or len(set(self.q_parts)) != 4:
            raise PreconditionError("need 4 distinct vertices in 4 distinct parts")


def _check_clique(g: Graph, vs: tuple[int, int, int, int]) -> None:
    for i in range(4):
        for j in range(i + 1, 4):
            if not g.has_edge(vs[i], vs[j]):
                raise InternalInvariantError(f"claimed clique misses edge ({vs[i]},{vs[j]})")


def double_fan_rainbow_k4(
    f: Graph,
    centres: tuple[int, int],
    p: VertexPartition,
    q: VertexPartition,
    c: int,
) -> RainbowK4:
    """Extend the two centres of a double-fan to a 4-clique spread over four
    q-parts, given centres in distinct p-parts and distinct q-parts.

    Requires at least 8c^2+2c+1 vertices, a tree-partition p, and all
    p-part/q-part intersections at most c.
    """
    v1, v2 = centres
    for v in centres:
        if f.degree(v) != f.n - 1:
            raise PreconditionError(f"centre {v} is not dominant in the double-fan")
    rest = [v for v in range(f.n) if v not in (v1, v2)]
    order = _path_order(f, rest)
    if f.n < 8 * c * c + 2 * c + 1:
        raise PreconditionError(
            f"double-fan needs at least 8c^2+2c+1={8*c*c+2*c+1} vertices, has {f.n}"
        )
    if p.host != f or q.host != f:
        raise PreconditionError("partitions must partition the double-fan")
    if not is_tree_partition(f, p):
        raise PreconditionError("first partition is not a tree-partition")
    viol = intersection_cap_violation(p, q, c)
    if viol is not None:
        raise PreconditionError(f"parts {viol[0]},{viol[1]} intersect in {viol[2]} > c vertices")
    if p.part_of(v1) == p.part_of(v2):
        raise PreconditionError("centres must lie in distinct parts of the tree-partition")
    if q.part_of(v1) == q.part_of(v2):
        raise PreconditionError("centres must lie in distinct parts of the second partition")
    if len(p.parts) != 2:  # pragma: no cover - forced by the tree-partition
        raise InternalInvariantError("double-fan tree-partition must collapse to the two centre parts")
    q1, q2 = q.part_of(v1), q.part_of(v2)
    removed = {v for v in rest if q.part_of(v) in (q1, q2)}
    run = _first_big_run(_runs_avoiding(order, removed), 2 * c + 1)
    if run is None:  # pragma: no cover - counting argument guarantees one
        raise InternalInvariantError("no long run avoiding the centres' q-parts")
    for a, b in zip(run, run[1:]):
        if q.part_of(a) != q.part_of(b):
            rb = RainbowK4(
                (v1, v2, a, b), (q1, q2, q.part_of(a), q.part_of(b))
            )
            _check_clique(f, rb.vertices)
            return rb
    raise InternalInvariantError("long run meets only one q-part")  # pragma: no cover


def _induced(p: VertexPartition, sub: Graph, old: tuple[int, ...]) -> VertexPartition:
    return p.restrict(sub, old)


def find_rainbow_k4(
    cx: CounterexampleStructure,
    p: VertexPartition,
    q: VertexPartition,
    c: int,
) -> RainbowK4:
    """Locate a 4-clique of the two-level distended fan spread over four
    distinct q-parts, for any tree-partition p and any q with all
    intersections at most c. Three stages, mirroring the structure:

    1. inside the base fan, find a path vertex v2 with q-part different from
       the centre's;
    2. if the centre and v2 also lie in different p-parts, the first-level
       double-fan over edge (centre, v2) yields the clique;
    3. otherwise walk that double-fan's path: a vertex in a different p-part
       routes into a second-level double-fan, and if the whole path shares the
       centre's p-part, a long run inside it crosses q-parts directly.
    """
    g = cx.graph
    if p.host != g or q.host != g:
        raise PreconditionError("partitions must partition the full gadget graph")
    if not is_tree_partition(g, p):
        raise PreconditionError("first partition is not a tree-partition")
    viol = intersection_cap_violation(p, q, c)
    if viol is not None:
        raise PreconditionError(f"parts {viol[0]},{viol[1]} intersect in {viol[2]} > c vertices")

    v1 = cx.centre
    fan_g = cx.fan_graph
    fan_old = tuple(range(fan_g.n))  # base vertices keep their indices
    v2 = fan_two_parts_witness(
        fan_g, v1, _induced(p, fan_g, fan_old), _induced(q, fan_g, fan_old), c
    )

    def rainbow_in_double_fan(dist: DistensionGraph, a: int, b: int) -> RainbowK4:
        verts = sorted(dist.double_fan_vertices(a, b))
        sub, old = g.subgraph(verts)
        new = {o: i for i, o in enumerate(old)}
        rb = double_fan_rainbow_k4(
            sub,
            (new[a], new[b]),
            _induced(p, sub, old),
            _induced(q, sub, old),
            c,
        )
        vs = tuple(old[i] for i in rb.vertices)
        out = RainbowK4(vs, tuple(q.part_of(v) for v in vs))
        _check_clique(g, out.vertices)
        return out

    if p.part_of(v1) != p.part_of(v2):
        return rainbow_in_double_fan(cx.first, v1, v2)

    # stage 3: walk the first-level path over edge (v1, v2)
    key = (v1, v2) if v1 < v2 else (v2, v1)
    path = cx.first.edge_paths[key]
    p1 = p.part_of(v1)
    q1, q2 = q.part_of(v1), q.part_of(v2)
    for v_prime in path:
        if p.part_of(v_prime) != p1:
            vi = v1 if q.part_of(v_prime) != q1 else v2
            return rainbow_in_double_fan(cx.second, vi, v_prime)
    removed = {v for v in path if q.part_of(v) in (q1, q2)}
    run = _first_big_run(_runs_avoiding(list(path), removed), c + 1)
    if run is None:  # pragma: no cover - counting argument guarantees one
        raise InternalInvariantError("no long run inside the shared-part path")
    for a, b in zip(run, run[1:]):
        if q.part_of(a) != q.part_of(b):
            out = RainbowK4(
                (v1, v2, a, b), (q1, q2, q.part_of(a), q.part_of(b))
            )
            _check_clique(g, out.vertices)
            return out
    raise InternalInvariantError("long run meets only one q-part")  # pragma: no cover


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


@lru_cache(maxsize=16)
def four_cliques(g: Graph) -> tuple[tuple[int, int, int, int], ...]:
    """All 4-cliques, each as an ascending tuple, in lexicographic order."""
    out = []
    for a, b in sorted(g.edges):
        common = sorted(u for u in g.neighbors(a) & g.neighbors(b) if u > b)
        for i, x in enumerate(common):
            for y in common[i + 1 :]:
                if g.has_edge(x, y):
                    out.append((a, b, x, y))
    return tuple(sorted(out))


def rainbow_k4_oracle(g: Graph, q: VertexPartition) -> RainbowK4 | None:
    """Exhaustive search for a 4-clique spread over four distinct q-parts."""
    if q.host != g:
        raise PreconditionError("partition does not partition this graph")
    for clique in four_cliques(g):
        parts = tuple(q.part_of(v) for v in clique)
        if len(set(parts)) == 4:
            return RainbowK4(clique, parts)
    return None
