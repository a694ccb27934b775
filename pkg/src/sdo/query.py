"""Fault queries over the oracle tree and full single-source enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Distance, Graph, UNREACHABLE
from .oracle import EdgeSide, OracleNode, OracleTree, VertexSide
from .spt import tree_edge_lower, is_ancestor


@dataclass(frozen=True, slots=True)
class QueryResult:
    """Answer plus how deep the case dispatch descended (diagnostic)."""

    distance: Distance
    recursion_depth: int


@dataclass(slots=True)
class SsrpOutput:
    """One record per (destination, tree edge above it): the distance from
    the source to that destination when the edge fails."""

    records: list[tuple[int, tuple[int, int], Distance]]

    def to_tsv(self) -> str:
        lines = [
            f"{t}\t{x}\t{y}\t{'INF' if d is UNREACHABLE else d}"
            for t, (x, y), d in self.records
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def _query_node(
    node: OracleNode, t: int, eid: int, depth: int, left_on_primary: bool
) -> tuple[Distance, int]:
    while True:
        if node.is_leaf:
            return node.base_table[eid][t], depth

        side_e = node.edge_side[eid]
        if side_e == EdgeSide.CROSSING:
            return node.spt_s.dist[t], depth

        if side_e == EdgeSide.N_SIDE:
            if node.vertex_side[t] == VertexSide.M:
                return node.spt_s.dist[t], depth
            t = node.right_vertex_map[t]
            eid = node.right_edge_map[eid]
            node = node.right
            depth += 1
            continue

        if side_e == EdgeSide.M_OFF_PRIMARY:
            if node.vertex_side[t] == VertexSide.N:
                return node.spt_s.dist[t], depth
            t = node.left_vertex_map[t]
            eid = node.left_edge_map[eid]
            node = node.left
            depth += 1
            continue

        # fault on the primary path
        pos = node.primary_pos_of_edge[eid]
        jump = node.sr_replacements[pos] + node.spt_r.dist[t]
        on_path = t in node.primary_path.index_of
        best: Distance = jump
        if not on_path and node.dep is not None:
            dep = node.dep[t].query(pos)
            if dep < best:
                best = dep
        recurse_left = (
            left_on_primary
            and node.vertex_side[t] != VertexSide.N
            and t != node.separator
        )
        if recurse_left:
            sub, sub_depth = _query_node(
                node.left,
                node.left_vertex_map[t],
                node.left_edge_map[eid],
                depth + 1,
                left_on_primary,
            )
            if sub < best:
                best = sub
            return best, sub_depth
        return best, depth


def resolve_edge_id(g: Graph, spt, x: int, y: int) -> int:
    """Edge id for a vertex pair; with parallel edges the tree edge wins."""
    candidates = g.edge_ids_between(x, y)
    if not candidates:
        raise ValueError(f"no edge between {x} and {y}")
    for eid in candidates:
        if tree_edge_lower(spt, eid) is not None:
            return eid
    return min(candidates)


def query(
    oracle: OracleTree,
    t: int,
    e: tuple[int, int],
    *,
    _left_recursion_on_primary: bool = True,
) -> QueryResult:
    """Length of the shortest source -> t path avoiding edge e = (x, y).

    Faults off the t tree path leave the distance unchanged; destinations
    outside the source's component answer UNREACHABLE. The keyword flag exists
    only so tests can demonstrate the recursion branch is load-bearing.
    """
    g = oracle.original_graph
    x, y = e
    if not (0 <= t < g.n):
        raise ValueError(f"destination {t} out of range [0, {g.n})")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"edge endpoints ({x}, {y}) out of range [0, {g.n})")
    if not g.edge_ids_between(x, y):
        raise ValueError(f"no edge between {x} and {y}")

    rt = oracle.to_root_id[t]
    if rt is None:
        return QueryResult(UNREACHABLE, 0)
    root = oracle.root
    rx, ry = oracle.to_root_id[x], oracle.to_root_id[y]
    if rx is None or ry is None:
        return QueryResult(root.spt_s.dist[rt], 0)
    eid = resolve_edge_id(root.graph, root.spt_s, rx, ry)
    lower = tree_edge_lower(root.spt_s, eid)
    if lower is None or not is_ancestor(root.spt_s, lower, rt):
        return QueryResult(root.spt_s.dist[rt], 0)
    dist, depth = _query_node(root, rt, eid, 0, _left_recursion_on_primary)
    return QueryResult(dist, depth)


def ssrp(oracle: OracleTree) -> SsrpOutput:
    """For every reachable destination and every tree edge above it, the
    avoiding distance; records ordered by destination then edge depth."""
    root = oracle.root
    spt = root.spt_s
    unmap = oracle.from_root_id
    records: list[tuple[int, tuple[int, int], Distance]] = []
    for t_orig in range(oracle.original_graph.n):
        rt = oracle.to_root_id[t_orig]
        if rt is None or rt == root.source:
            continue
        chain: list[tuple[int, int, int]] = []
        cur = rt
        while cur != root.source:
            p = spt.parent[cur]
            chain.append((p, cur, spt.parent_edge[cur]))
            cur = p
        chain.reverse()
        for upper, lower, eid in chain:
            dist, _ = _query_node(root, rt, eid, 0, True)
            records.append((t_orig, (unmap[upper], unmap[lower]), dist))
    return SsrpOutput(records)
