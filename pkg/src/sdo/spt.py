"""Shortest-path trees with canonical tie-breaking, LCA index, tree separator."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Collection

import numpy as np

from .graphs import Distance, Graph, UNREACHABLE


class ShortestPathTree:
    """Dijkstra tree from one source with deterministic shape.

    ``dist`` holds exact integer distances (UNREACHABLE where no path exists),
    ``parent``/``parent_edge`` the canonical tree, ``depth`` hop depths, and
    ``order`` the finalization sequence (source first, children after parents).
    """

    __slots__ = (
        "graph",
        "source",
        "dist",
        "parent",
        "parent_edge",
        "depth",
        "order",
        "_lca",
    )

    def __init__(self, graph: Graph, source: int):
        self.graph = graph
        self.source = source
        n = graph.n
        self.dist: list[Distance] = [UNREACHABLE] * n
        self.parent: list[int | None] = [None] * n
        self.parent_edge: list[int | None] = [None] * n
        self.depth: list[int] = [0] * n
        self.order: list[int] = []
        self._lca: _LcaIndex | None = None

    def reachable(self, v: int) -> bool:
        return self.dist[v] is not UNREACHABLE

    def reachable_count(self) -> int:
        return len(self.order)


def dijkstra(g: Graph, source: int, banned_edges: Collection[int] = ()) -> ShortestPathTree:
    """Shortest paths in ``g`` minus ``banned_edges``.

    Ties break on (distance, original-before-virtual, source-predecessor-first
    among virtual, predecessor id, vertex id, edge id), so repeated builds are
    bit-identical and on unweighted input the tree is the classic
    (distance, predecessor id, vertex id) canonical tree.
    """
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range [0, {g.n})")
    banned = banned_edges if isinstance(banned_edges, (set, frozenset)) else set(banned_edges)
    spt = ShortestPathTree(g, source)
    dist = spt.dist
    parent = spt.parent
    parent_edge = spt.parent_edge
    depth = spt.depth
    edges = g.edges
    adj = g.adj

    # best known (relaxation key) per vertex, pruning duplicate heap pushes
    best: list[tuple | None] = [None] * g.n
    start = (0, 0, 0, -1, source, -1)
    best[source] = start
    heap = [start]
    done = [False] * g.n
    while heap:
        entry = heapq.heappop(heap)
        d, _, _, pred, v, eid = entry
        if done[v] or entry != best[v]:
            continue
        done[v] = True
        spt.order.append(v)
        dist[v] = d
        if pred >= 0:
            parent[v] = pred
            parent_edge[v] = eid
            depth[v] = depth[pred] + 1
        for e2 in adj[v]:
            if e2 in banned:
                continue
            edge = edges[e2]
            w = edge.other(v)
            if done[w]:
                continue
            cand = (
                d + edge.weight,
                1 if edge.virtual else 0,
                (1 if v != source else 0) if edge.virtual else 0,
                v,
                w,
                e2,
            )
            if best[w] is None or cand < best[w]:
                best[w] = cand
                heapq.heappush(heap, cand)
    return spt


class _LcaIndex:
    """Euler tour plus numpy sparse table: O(1) LCA, O(1) ancestor tests."""

    __slots__ = ("euler", "first", "tin", "tout", "_table", "_euler_depth")

    def __init__(self, spt: ShortestPathTree):
        n = spt.graph.n
        children: list[list[int]] = [[] for _ in range(n)]
        for v in spt.order:
            p = spt.parent[v]
            if p is not None:
                children[p].append(v)
        for cs in children:
            cs.sort()

        euler: list[int] = []
        euler_depth: list[int] = []
        first = [-1] * n
        tin = [-1] * n
        tout = [-1] * n
        clock = 0
        stack: list[tuple[int, int]] = [(spt.source, 0)]
        while stack:
            v, ci = stack.pop()
            if ci == 0:
                tin[v] = clock
                clock += 1
                first[v] = len(euler)
            euler.append(v)
            euler_depth.append(spt.depth[v])
            if ci < len(children[v]):
                stack.append((v, ci + 1))
                stack.append((children[v][ci], 0))
            else:
                tout[v] = clock
                clock += 1

        self.euler = np.asarray(euler, dtype=np.int32)
        self._euler_depth = np.asarray(euler_depth, dtype=np.int32)
        self.first = first
        self.tin = tin
        self.tout = tout

        m = len(euler)
        levels = max(1, m.bit_length())
        table = np.empty((levels, m), dtype=np.int32)
        table[0] = np.arange(m, dtype=np.int32)
        dep = self._euler_depth
        for k in range(1, levels):
            half = 1 << (k - 1)
            span = 1 << k
            if span > m:
                table[k] = table[k - 1]
                continue
            left = table[k - 1, : m - span + 1]
            right = table[k - 1, half : m - span + 1 + half]
            take_left = dep[left] <= dep[right]
            table[k, : m - span + 1] = np.where(take_left, left, right)
            table[k, m - span + 1 :] = table[k - 1, m - span + 1 :]
        self._table = table

    def lca(self, u: int, v: int) -> int:
        lo, hi = self.first[u], self.first[v]
        if lo > hi:
            lo, hi = hi, lo
        k = (hi - lo + 1).bit_length() - 1
        a = self._table[k, lo]
        b = self._table[k, hi - (1 << k) + 1]
        pos = a if self._euler_depth[a] <= self._euler_depth[b] else b
        return int(self.euler[pos])

    def is_ancestor(self, u: int, v: int) -> bool:
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]


def build_lca(spt: ShortestPathTree) -> None:
    """Attach the constant-time LCA/ancestor index to the tree."""
    if spt._lca is None:
        spt._lca = _LcaIndex(spt)


def lca(spt: ShortestPathTree, u: int, v: int) -> int:
    """Deepest common ancestor of u and v; both must be reachable."""
    if not spt.reachable(u) or not spt.reachable(v):
        raise ValueError("lca undefined for vertices unreachable from the source")
    build_lca(spt)
    return spt._lca.lca(u, v)


def is_ancestor(spt: ShortestPathTree, u: int, v: int) -> bool:
    """True iff u is an ancestor of v (or u == v) in the tree."""
    if not spt.reachable(u) or not spt.reachable(v):
        return False
    if spt._lca is not None:
        return spt._lca.is_ancestor(u, v)
    cur: int | None = v
    while cur is not None:
        if cur == u:
            return True
        cur = spt.parent[cur]
    return False


@dataclass(slots=True)
class PathOnTree:
    """A top-to-bottom tree path: vertices, the tree edges between them, and
    the inverse position map."""

    vertices: list[int]
    edge_ids: list[int]
    index_of: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index_of:
            self.index_of = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def top(self) -> int:
        return self.vertices[0]

    @property
    def bottom(self) -> int:
        return self.vertices[-1]


def tree_path(spt: ShortestPathTree, u: int, v: int) -> PathOnTree:
    """Ordered u -> v path along the tree; u must be an ancestor of v."""
    verts = [v]
    eids: list[int] = []
    cur = v
    while cur != u:
        p = spt.parent[cur]
        if p is None:
            raise ValueError(f"{u} is not an ancestor of {v}")
        eids.append(spt.parent_edge[cur])
        verts.append(p)
        cur = p
    verts.reverse()
    eids.reverse()
    return PathOnTree(verts, eids)


def tree_edge_lower(spt: ShortestPathTree, eid: int) -> int | None:
    """The child endpoint if ``eid`` is a tree edge, else None."""
    e = spt.graph.edges[eid]
    if spt.parent_edge[e.u] == eid:
        return e.u
    if spt.parent_edge[e.v] == eid:
        return e.v
    return None


def edge_on_tree_path(spt: ShortestPathTree, t: int, e: tuple[int, int]) -> bool:
    """True iff (x, y) is a tree edge whose lower endpoint is an ancestor of t
    (or t itself), i.e. the edge lies on the source -> t tree path."""
    if not spt.reachable(t):
        return False
    x, y = e
    if spt.parent[y] == x:
        lower = y
    elif spt.parent[x] == y:
        lower = x
    else:
        return False
    return is_ancestor(spt, lower, t)


@dataclass(slots=True)
class SeparatorSplit:
    """Separator r and the two vertex sides; V_M and V_N overlap only at r."""

    r: int
    in_m: list[bool]
    in_n: list[bool]
    reachable_count: int
    size_m: int
    size_n: int


def separator_split(spt: ShortestPathTree) -> SeparatorSplit:
    """Split the reachable tree at a separator r into edge-disjoint sides.

    Descends from the root into the heaviest child while that subtree exceeds
    two thirds of the reachable count. If the heaviest child below the stop
    vertex is big enough it becomes r and N is its subtree; otherwise r is the
    stop vertex and whole child subtrees are grouped into N, largest first,
    until N holds at least max(floor(nr / 3), 2) vertices. The floor of 2
    guarantees both sides strictly shrink for nr >= 3.
    """
    order = spt.order
    nr = len(order)
    if nr < 2:
        raise ValueError("separator undefined on single-vertex trees")
    n = spt.graph.n
    parent = spt.parent
    size = [0] * n
    heavy: list[int] = [-1] * n
    for v in reversed(order):
        size[v] += 1
        p = parent[v]
        if p is not None:
            size[p] += size[v]
            h = heavy[p]
            if h < 0 or size[v] > size[h] or (size[v] == size[h] and v < h):
                heavy[p] = v

    v = spt.source
    while heavy[v] >= 0 and 3 * size[heavy[v]] > 2 * nr:
        v = heavy[v]
    c = heavy[v]
    target = max(nr // 3, 2)
    if target > nr - 1:
        target = nr - 1

    children: list[list[int]] = [[] for _ in range(n)]
    for w in order:
        p = parent[w]
        if p is not None:
            children[p].append(w)

    if size[c] >= target:
        r = c
        n_roots = [c]
        size_n = size[c]
    else:
        r = v
        size_n = 1
        n_roots = []
        for ch in sorted(children[v], key=lambda w: (-size[w], w)):
            n_roots.append(ch)
            size_n += size[ch]
            if size_n >= target:
                break

    in_n = [False] * n
    in_n[r] = True
    stack = list(n_roots)
    while stack:
        w = stack.pop()
        in_n[w] = True
        stack.extend(children[w])
    in_m = [False] * n
    for w in order:
        if not in_n[w] or w == r:
            in_m[w] = True
    size_m = nr - size_n + 1
    return SeparatorSplit(r, in_m, in_n, nr, size_m, size_n)


def find_separator(spt: ShortestPathTree) -> int:
    """Separator vertex r; see separator_split for the balance guarantees."""
    return separator_split(spt).r


def separator_balanced(split: SeparatorSplit) -> bool:
    """The balance predicate: floor(nr/3) <= |V_M|, |V_N| <= ceil(2 nr/3) + 1."""
    nr = split.reachable_count
    lo = nr // 3
    hi = -(-2 * nr // 3) + 1
    return lo <= split.size_m <= hi and lo <= split.size_n <= hi
