"""Candidate departing paths: per-destination sorted arrays and their queries.

A departing route for a fault on the primary path leaves the path above the
fault and never returns to it. For each destination off the path we keep the
short list of candidate routes whose lengths strictly increase while their
departure points climb strictly toward the source; a fault is then answered by
a binary search for the first candidate departing at or above it.
"""

from __future__ import annotations

import heapq
from array import array
from dataclasses import dataclass

from .graphs import Distance, Graph, UNREACHABLE
from .spt import PathOnTree, ShortestPathTree, build_lca, dijkstra


@dataclass(frozen=True, slots=True)
class DepEntry:
    """One stored candidate: its length, departure point (vertex and path
    position), destination, and final edge with weight."""

    length: int
    dp: int
    dp_depth: int
    end: int
    last_edge: int
    last_edge_weight: int


class DepArray:
    """Candidates for one destination, lengths strictly increasing and
    departure positions strictly decreasing."""

    __slots__ = ("end", "lengths", "dp_depths", "dps", "last_edges", "last_weights")

    def __init__(self, end: int):
        self.end = end
        self.lengths = array("q")
        self.dp_depths = array("q")
        self.dps = array("q")
        self.last_edges = array("q")
        self.last_weights = array("q")

    def __len__(self) -> int:
        return len(self.lengths)

    def __getitem__(self, i: int) -> DepEntry:
        return DepEntry(
            length=self.lengths[i],
            dp=self.dps[i],
            dp_depth=self.dp_depths[i],
            end=self.end,
            last_edge=self.last_edges[i],
            last_edge_weight=self.last_weights[i],
        )

    def entries(self) -> list[DepEntry]:
        return [self[i] for i in range(len(self))]

    def query(self, edge_pos: int) -> Distance:
        """Length of the cheapest candidate departing at or above the path
        vertex with position ``edge_pos`` (the fault's upper endpoint)."""
        depths = self.dp_depths
        lo, hi = 0, len(depths)
        while lo < hi:
            mid = (lo + hi) // 2
            if depths[mid] <= edge_pos:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(depths):
            return UNREACHABLE
        return self.lengths[lo]

    def _append(self, length: int, dp: int, dp_depth: int, last_edge: int, last_w: int):
        self.lengths.append(length)
        self.dp_depths.append(dp_depth)
        self.dps.append(dp)
        self.last_edges.append(last_edge)
        self.last_weights.append(last_w)

    def _replace_last(self, length: int, dp: int, dp_depth: int, last_edge: int, last_w: int):
        self.lengths[-1] = length
        self.dp_depths[-1] = dp_depth
        self.dps[-1] = dp
        self.last_edges[-1] = last_edge
        self.last_weights[-1] = last_w


@dataclass(slots=True)
class DepBuildStats:
    """Heap accounting for the construction cost bound."""

    departure_seeds: int = 0
    accepted: int = 0
    pushes: int = 0
    pops: int = 0
    max_degree: int = 0


def build_dep(
    g: Graph, spt_s: ShortestPathTree, path: PathOnTree
) -> tuple[list[DepArray], DepBuildStats]:
    """Grow all candidate arrays with one best-first pass.

    The heap is seeded with every single-edge departure from the path (one
    candidate per path vertex and incident off-path edge, departing at that
    vertex), then closed under off-path extensions of accepted candidates.
    Popping by (length, departure position) and keeping a candidate only when
    it departs strictly above the incumbent yields the doubly monotone arrays:
    the first entry kept for a destination is a shortest route with the
    highest achievable departure, and later entries trade length for height.
    """
    n = g.n
    build_lca(spt_s)
    on_path = [False] * n
    for v in path.vertices:
        on_path[v] = True

    dist = spt_s.dist
    adj = g.adj
    edges = g.edges
    dep = [DepArray(v) for v in range(n)]
    stats = DepBuildStats()
    stats.max_degree = max((len(a) for a in adj), default=0)

    heap: list[tuple[int, int, int, int, int, int]] = []
    seq = 0

    def push_extensions(v: int, length: int, dp_depth: int) -> None:
        nonlocal seq
        for eid in adj[v]:
            e = edges[eid]
            w = e.other(v)
            if on_path[w]:
                continue
            heapq.heappush(heap, (length + e.weight, dp_depth, -w, seq, w, eid))
            seq += 1
            stats.pushes += 1

    for dpi, u in enumerate(path.vertices):
        base = dist[u]
        for eid in adj[u]:
            e = edges[eid]
            w = e.other(u)
            if on_path[w]:
                continue
            heapq.heappush(heap, (base + e.weight, dpi, -w, seq, w, eid))
            seq += 1
            stats.pushes += 1
            stats.departure_seeds += 1

    dps_vertices = path.vertices
    while heap:
        length, dpi, _, _, v, eid = heapq.heappop(heap)
        stats.pops += 1
        arr = dep[v]
        if len(arr.dp_depths):
            last_dpi = arr.dp_depths[-1]
            if dpi >= last_dpi:
                continue
            dp = dps_vertices[dpi]
            if length == arr.lengths[-1]:
                arr._replace_last(length, dp, dpi, eid, edges[eid].weight)
            else:
                arr._append(length, dp, dpi, eid, edges[eid].weight)
        else:
            arr._append(length, dps_vertices[dpi], dpi, eid, edges[eid].weight)
        stats.accepted += 1
        push_extensions(v, length, dpi)
    return dep, stats


def query_dep(dep: list[DepArray], t: int, edge_pos: int) -> Distance:
    """Best departing length to t for the path edge at ``edge_pos`` (the
    position of its upper endpoint)."""
    return dep[t].query(edge_pos)


def brute_departing(
    g: Graph, spt_s: ShortestPathTree, path: PathOnTree
) -> list[list[Distance]]:
    """Independent oracle: per destination and path-edge position, the best
    departing length, via one vertex-banned Dijkstra per path vertex.

    Banning every edge incident to the other path vertices confines each run
    to detours that leave the path exactly at its start vertex.
    """
    n = g.n
    k = len(path.edge_ids)
    on_path = set(path.vertices)
    result: list[list[Distance]] = [[UNREACHABLE] * k for _ in range(n)]
    if k == 0:
        return result
    running: list[Distance] = [UNREACHABLE] * n
    for j, u_j in enumerate(path.vertices[:k]):
        banned = {
            eid
            for v in path.vertices
            if v != u_j
            for eid in g.adj[v]
        }
        detour = dijkstra(g, u_j, banned).dist
        prefix = spt_s.dist[u_j]
        for t in range(n):
            if t in on_path:
                continue
            cand = prefix + detour[t]
            if cand < running[t]:
                running[t] = cand
            result[t][j] = running[t]
    return result
