"""Exact planarity testing via the left-right criterion.

Iterative implementation (no recursion) so graphs with hundreds of thousands of
vertices are fine. Only the decision is computed; no embedding is produced.
"""

from __future__ import annotations

from .graph import Graph

OrientedEdge = tuple[int, int]


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: OrientedEdge | None = None, high: OrientedEdge | None = None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left: _Interval | None = None, right: _Interval | None = None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left

    def lowest(self, lowpt) -> int:
        if self.left.empty():
            return lowpt[self.right.low]
        if self.right.empty():
            return lowpt[self.left.low]
        return min(lowpt[self.left.low], lowpt[self.right.low])


class _LRTest:
    """State of the left-right test on one graph (all components)."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = g.adjacency_lists()
        self.height: list[int | None] = [None] * g.n
        self.parent_edge: list[OrientedEdge | None] = [None] * g.n
        self.lowpt: dict[OrientedEdge, int] = {}
        self.lowpt2: dict[OrientedEdge, int] = {}
        self.nesting_depth: dict[OrientedEdge, int] = {}
        self.oriented: set[OrientedEdge] = set()
        self.ordered_adj: list[list[int]] = [[] for _ in range(g.n)]
        self.ref: dict[OrientedEdge, OrientedEdge | None] = {}
        self.side: dict[OrientedEdge, int] = {}
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[OrientedEdge, _ConflictPair | None] = {}
        self.lowpt_edge: dict[OrientedEdge, OrientedEdge] = {}

    def run(self) -> bool:
        roots = []
        for s in range(self.n):
            if self.height[s] is None:
                self.height[s] = 0
                roots.append(s)
                self._orient_from(s)
        for v in range(self.n):
            self.ordered_adj[v] = sorted(
                (w for w in self.adj[v] if (v, w) in self.oriented),
                key=lambda w: self.nesting_depth[(v, w)],
            )
        for s in roots:
            if not self._test_from(s):
                return False
        return True

    # -- phase 1: DFS orientation with lowpoints ------------------------

    def _finish_edge(self, v: int, vw: OrientedEdge, e: OrientedEdge | None) -> None:
        self.nesting_depth[vw] = 2 * self.lowpt[vw]
        if self.lowpt2[vw] < self.height[v]:
            self.nesting_depth[vw] += 1  # chordal
        if e is not None:
            if self.lowpt[vw] < self.lowpt[e]:
                self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                self.lowpt[e] = self.lowpt[vw]
            elif self.lowpt[vw] > self.lowpt[e]:
                self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
            else:
                self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    def _orient_from(self, root: int) -> None:
        ind = {}
        returning: dict[int, OrientedEdge] = {}  # vertex -> tree edge just completed
        stack = [root]
        while stack:
            v = stack.pop()
            e = self.parent_edge[v]
            i = ind.get(v, 0)
            pending = returning.pop(v, None)
            descended = False
            while i < len(self.adj[v]):
                w = self.adj[v][i]
                vw = (v, w)
                if pending == vw:
                    # child subtree finished: compute nesting, push lowpoints up
                    pending = None
                    self._finish_edge(v, vw, e)
                    i += 1
                    continue
                if vw in self.oriented or (w, v) in self.oriented:
                    i += 1
                    continue
                self.oriented.add(vw)
                self.lowpt[vw] = self.height[v]
                self.lowpt2[vw] = self.height[v]
                self.ref[vw] = None
                self.side[vw] = 1
                if self.height[w] is None:  # tree edge: descend
                    self.parent_edge[w] = vw
                    self.height[w] = self.height[v] + 1
                    ind[v] = i
                    returning[v] = vw
                    stack.append(v)
                    stack.append(w)
                    descended = True
                    break
                # back edge
                self.lowpt[vw] = self.height[w]
                self._finish_edge(v, vw, e)
                i += 1
            if not descended:
                ind[v] = i

    # -- phase 2: constraint testing -------------------------------------

    def _top(self) -> _ConflictPair | None:
        return self.S[-1] if self.S else None

    def _conflicting(self, interval: _Interval, b: OrientedEdge) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _add_constraints(self, ei: OrientedEdge, e: OrientedEdge) -> bool:
        P = _ConflictPair()
        # merge return edges of ei into P.right
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if self.lowpt[Q.right.low] > self.lowpt[e]:
                if P.right.empty():
                    P.right.high = Q.right.high
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:  # align
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while self._conflicting(self._top().left, ei) or self._conflicting(
            self._top().right, ei
        ):
            Q = self.S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            # merge the part below lowpt(ei) into P.right
            self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left.high = Q.left.high
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _trim_back_edges(self, u: int) -> None:
        hu = self.height[u]
        # drop entire conflict pairs returning to u
        while self.S and self.S[-1].lowest(self.lowpt) == hu:
            P = self.S.pop()
            if P.left.low is not None:
                self.side[P.left.low] = -1
        if not self.S:
            return
        P = self.S.pop()
        # trim left interval
        while P.left.high is not None and P.left.high[1] == u:
            P.left.high = self.ref[P.left.high]
        if P.left.high is None and P.left.low is not None:
            self.ref[P.left.low] = P.right.low
            self.side[P.left.low] = -1
            P.left.low = None
        # trim right interval
        while P.right.high is not None and P.right.high[1] == u:
            P.right.high = self.ref[P.right.high]
        if P.right.high is None and P.right.low is not None:
            self.ref[P.right.low] = P.left.low
            self.side[P.right.low] = -1
            P.right.low = None
        self.S.append(P)

    def _test_from(self, root: int) -> bool:
        ind = {}
        returning: dict[int, OrientedEdge] = {}
        stack = [root]
        while stack:
            v = stack.pop()
            e = self.parent_edge[v]
            i = ind.get(v, 0)
            pending = returning.pop(v, None)
            descended = False
            order = self.ordered_adj[v]
            while i < len(order):
                w = order[i]
                ei = (v, w)
                if pending != ei:
                    self.stack_bottom[ei] = self._top()
                    if ei == self.parent_edge[w]:  # tree edge: descend
                        ind[v] = i
                        returning[v] = ei
                        stack.append(v)
                        stack.append(w)
                        descended = True
                        break
                    # back edge
                    self.lowpt_edge[ei] = ei
                    self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                else:
                    pending = None
                # integrate return edges of ei
                if self.lowpt[ei] < self.height[v]:
                    if w == order[0]:
                        if e is not None:
                            self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                i += 1
            if descended:
                continue
            ind[v] = i
            if e is not None:
                u = e[0]
                self._trim_back_edges(u)
                if self.lowpt[e] < self.height[u]:  # e has return edges
                    top = self._top()
                    hl = top.left.high
                    hr = top.right.high
                    if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                        self.ref[e] = hl
                    else:
                        self.ref[e] = hr
        return True


def is_planar(g: Graph) -> bool:
    """Exact planarity decision."""
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return _LRTest(g).run()
