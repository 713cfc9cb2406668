"""Immutable graph values and the structural operations everything else consumes.

Vertices are dense integer indices 0..n-1. All operations are pure: identification
operations (quotients) return a fresh graph plus a VertexMap so provenance survives
multi-stage pipelines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Immutable after construction. Equality and hashing compare the vertex count
    and edge set only; labels are provenance annotations and are ignored.
    """

    __slots__ = ("n", "edges", "labels", "_adj", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: tuple[str, ...] | None = None,
    ):
        if n < 0:
            raise PreconditionError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
            norm.add(_norm_edge(u, v))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise PreconditionError("labels must cover every vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "labels", labels)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Graph is immutable")

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.edges))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `vertices`. Returns (graph, old_of_new) where
        old_of_new[i] is the original index of new vertex i (ascending order)."""
        old = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(old)}
        if any(not (0 <= v < self.n) for v in old):
            raise PreconditionError("subgraph vertices out of range")
        sub_edges = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        labels = tuple(self.label_of(v) for v in old) if self.labels else None
        return Graph(len(old), sub_edges, labels), old

    def without_vertices(self, removed: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(removed)
        return self.subgraph(v for v in range(self.n) if v not in drop)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(extra), self.labels)

    def adjacency_lists(self) -> list[list[int]]:
        return [sorted(self._adj[v]) for v in range(self.n)]


# -- small named constructors ---------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(c: int) -> Graph:
    """K_c with vertices 0..c-1."""
    if c < 1:
        raise PreconditionError("complete_graph requires c >= 1")
    return Graph(c, [(i, j) for i in range(c) for j in range(i + 1, c)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle_graph requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# -- matchings, maps, partitions -------------------------------------------


class Matching:
    """A set of pairwise vertex-disjoint edges (validated against a host on use)."""

    __slots__ = ("edges",)

    def __init__(self, edges: Iterable[tuple[int, int]] = ()):
        norm = frozenset(_norm_edge(u, v) for u, v in edges)
        seen: set[int] = set()
        for u, v in sorted(norm):
            if u == v or u in seen or v in seen:
                raise PreconditionError(f"pairs share a vertex or are loops: ({u},{v})")
            seen.add(u)
            seen.add(v)
        object.__setattr__(self, "edges", norm)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Matching is immutable")

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({sorted(self.edges)})"

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def partner(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def check_against(self, g: Graph) -> None:
        for u, v in self.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise PreconditionError(f"matching pair ({u},{v}) is not an edge of the host")


@dataclass(frozen=True)
class VertexMap:
    """A total function from host vertices to image vertices."""

    host: Graph
    image: Graph
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.host.n:
            raise PreconditionError("assignment must be total on the host vertices")
        for v in self.assignment:
            if not (0 <= v < self.image.n):
                raise PreconditionError(f"assignment value {v} outside image vertex range")

    def __call__(self, v: int) -> int:
        return self.assignment[v]


class VertexPartition:
    """A partition of V(host) into disjoint nonempty parts.

    Parts are normalized to ascending order of their minimum vertex, so equal
    partitions compare equal and all derived part indices are deterministic.
    """

    __slots__ = ("host", "parts", "_part_id")

    def __init__(self, host: Graph, parts: Iterable[Iterable[int]]):
        norm = tuple(
            sorted((frozenset(p) for p in parts), key=lambda p: min(p) if p else -1)
        )
        part_id = [-1] * host.n
        count = 0
        for i, part in enumerate(norm):
            if not part:
                raise PreconditionError("parts must be nonempty")
            for v in part:
                if not (0 <= v < host.n):
                    raise PreconditionError(f"part vertex {v} out of range")
                if part_id[v] != -1:
                    raise PreconditionError(f"vertex {v} appears in two parts")
                part_id[v] = i
            count += len(part)
        if count != host.n:
            missing = [v for v in range(host.n) if part_id[v] == -1]
            raise PreconditionError(f"parts do not cover vertices {missing[:5]}")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "parts", norm)
        object.__setattr__(self, "_part_id", tuple(part_id))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("VertexPartition is immutable")

    def __len__(self) -> int:
        return len(self.parts)

    def part_of(self, v: int) -> int:
        return self._part_id[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexPartition)
            and self.host == other.host
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash((self.host, self.parts))

    def __repr__(self) -> str:
        return f"VertexPartition({[sorted(p) for p in self.parts]})"

    def restrict(self, sub: Graph, old_of_new: tuple[int, ...]) -> "VertexPartition":
        """Induced partition on a subgraph given its index mapping."""
        groups: dict[int, list[int]] = {}
        for new, old in enumerate(old_of_new):
            groups.setdefault(self.part_of(old), []).append(new)
        return VertexPartition(sub, groups.values())


def singleton_partition(g: Graph) -> VertexPartition:
    return VertexPartition(g, [[v] for v in range(g.n)])


# -- products, cones, quotients ---------------------------------------------


def strong_product(a: Graph, b: Graph) -> Graph:
    """Strong product: distinct (v,x),(w,y) adjacent iff each coordinate is
    equal or adjacent in its factor (and not both equal).

    Vertex (v,x) gets index v*b.n + x and a label recording the coordinate pair.
    """
    n = a.n * b.n

    def idx(v: int, x: int) -> int:
        return v * b.n + x

    edges: list[Edge] = []
    for v in range(a.n):
        for x, y in b.edges:
            edges.append((idx(v, x), idx(v, y)))
    for v, w in a.edges:
        for x in range(b.n):
            edges.append((idx(v, x), idx(w, x)))
        for x, y in b.edges:
            edges.append((idx(v, x), idx(w, y)))
            edges.append((idx(v, y), idx(w, x)))
    labels = tuple(
        f"({a.label_of(v)},{b.label_of(x)})" for v in range(a.n) for x in range(b.n)
    )
    return Graph(n, edges, labels)


def cone(g: Graph) -> tuple[Graph, int]:
    """Add one dominant vertex adjacent to everything; returns (graph, apex).

    The apex always gets index g.n.
    """
    apex = g.n
    edges = list(g.edges) + [(v, apex) for v in range(g.n)]
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels) + ("apex",)
    return Graph(g.n + 1, edges, labels), apex


def quotient_by_matching(g: Graph, m: Matching) -> tuple[Graph, VertexMap]:
    """Identify each matched pair; the result is simple (parallel edges merged,
    loops dropped). Classes are numbered by ascending minimum original vertex."""
    m.check_against(g)
    partner = m.partner()
    reps = sorted(v for v in range(g.n) if v not in partner or partner[v] > v)
    rep_index = {v: i for i, v in enumerate(reps)}
    assignment = []
    for v in range(g.n):
        r = v if v not in partner else min(v, partner[v])
        assignment.append(rep_index[r])
    edges = set()
    for u, v in g.edges:
        cu, cv = assignment[u], assignment[v]
        if cu != cv:
            edges.add(_norm_edge(cu, cv))
    q = Graph(len(reps), edges)
    return q, VertexMap(g, q, tuple(assignment))


def quotient_by_partition(g: Graph, p: VertexPartition) -> tuple[Graph, VertexMap]:
    """Identify the vertices in each part; parts are adjacent iff a cross edge exists."""
    if p.host != g:
        raise PreconditionError("partition does not partition this graph")
    assignment = tuple(p.part_of(v) for v in range(g.n))
    edges = set()
    for u, v in g.edges:
        cu, cv = assignment[u], assignment[v]
        if cu != cv:
            edges.add(_norm_edge(cu, cv))
    q = Graph(len(p.parts), edges)
    return q, VertexMap(g, q, assignment)


# -- elementary recognizers --------------------------------------------------


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, ordered by minimum vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_forest(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def blocks(g: Graph) -> tuple[list[frozenset[int]], frozenset[int]]:
    """Biconnected components and cut vertices (iterative Hopcroft-Tarjan).

    Bridges appear as 2-vertex blocks; isolated vertices as singleton blocks.
    Blocks are ordered by minimum vertex for determinism.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    edge_stack: list[Edge] = []
    out_blocks: list[set[int]] = []
    cuts: set[int] = set()
    adj = g.adjacency_lists()
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            out_blocks.append({root})
            disc[root] = timer
            timer += 1
            continue
        root_children = 0
        # stack frames: (v, parent, iterator index)
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent_v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1][2] += 1
                w = adj[v][i]
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, v, 0])
                elif w != parent_v and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u == root:
                        root_children += 1
                    if low[v] >= disc[u]:
                        if u != root:
                            cuts.add(u)
                        block: set[int] = set()
                        while True:
                            e = edge_stack.pop()
                            block.update(e)
                            if e == (u, v):
                                break
                        out_blocks.append(block)
        if root_children >= 2:
            cuts.add(root)
    out_blocks.sort(key=min)
    return [frozenset(b) for b in out_blocks], frozenset(cuts)
